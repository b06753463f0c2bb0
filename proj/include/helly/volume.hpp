#pragma once

#include <cstdint>
#include <optional>

#include "helly/geometry.hpp"

namespace helly {

// vol(.) with the unbounded and empty cases kept distinct. Finite(0) means
// nonempty but degenerate (lower-dimensional); Empty means infeasible.
struct VolumeValue {
  enum class Kind { Finite, Infinite, Empty };
  Kind kind = Kind::Empty;
  double value = 0.0;
  std::optional<double> stderr_est;  // Monte Carlo only

  static VolumeValue finite(double v) { return {Kind::Finite, v, std::nullopt}; }
  static VolumeValue infinite() { return {Kind::Infinite, 0.0, std::nullopt}; }
  static VolumeValue empty() { return {Kind::Empty, 0.0, std::nullopt}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  bool is_empty() const { return kind == Kind::Empty; }
  // Numeric view: Empty -> 0, Infinite -> +inf.
  double as_number() const;
};

enum class VolumeMode { Exact, MonteCarlo };

// Exact mode (d <= 3): vertex-enumerate the polytope clipped to
// [-clip,clip]^d and return the hull volume; when some vertex lies on the
// clip boundary the set was effectively unbounded and Infinite is
// returned. Monte Carlo mode: uniform samples in the clip box.
VolumeValue volume(const ConvexBody& body, VolumeMode mode = VolumeMode::Exact,
                   long long samples = 100000, double clip_radius = kDefaultBoundingRadius,
                   std::uint64_t seed = 0x5eedULL);

// Clipped intersection volume as a plain number (always finite): the exact
// volume of {x : halfspaces} intersected with [-clip,clip]^d. This is the
// working measure of the selection pipelines, where the clip box realizes
// the boundedness reduction.
struct ClippedMeasure {
  double value = 0.0;
  bool clip_active = false;
  bool feasible = false;
};
ClippedMeasure clipped_volume(const std::vector<Halfspace>& hs, int dim, double clip_radius);

// Vertex enumeration of the clipped polytope. Vertices are deduplicated;
// clip_active marks vertices on the clip boundary.
struct VertexEnumeration {
  std::vector<Vec> vertices;
  bool clip_active = false;
};
VertexEnumeration enumerate_vertices(const std::vector<Halfspace>& hs, int dim,
                                     double clip_radius);

// Volume of the convex hull of a point set (d <= 3). Points are assumed to
// be the vertex set of their hull up to duplicates/interior noise in the
// degenerate directions.
double hull_volume(const std::vector<Vec>& pts, int dim);

// Max pairwise distance over hull vertices; throws on empty or (after
// clipping) unbounded bodies.
double diameter(const ConvexBody& body, double clip_radius = kDefaultBoundingRadius);

// Diameter of a clipped halfspace intersection as a plain number: 0 when
// empty, measured on the clipped set when unbounded.
double clipped_diameter(const std::vector<Halfspace>& hs, int dim, double clip_radius);

// Monte Carlo hit-count kernels (fixed 256-shard decomposition with
// per-shard generators, so the serial reference and the OpenMP kernel
// produce identical counts).
long long mc_hits_serial(const ConvexBody& body, long long samples, double clip_radius,
                         std::uint64_t seed);
long long mc_hits_parallel(const ConvexBody& body, long long samples, double clip_radius,
                           std::uint64_t seed);

}  // namespace helly
