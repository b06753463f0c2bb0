#pragma once

#include <Eigen/Dense>
#include <optional>
#include <variant>
#include <vector>

#include "helly/common.hpp"

namespace helly {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// The set {x : normal . x <= offset}. normal need not be unit length.
struct Halfspace {
  Vec normal;
  double offset = 0.0;

  Halfspace() = default;
  Halfspace(Vec n, double b);
  int dim() const { return static_cast<int>(normal.size()); }
  Halfspace normalized() const;
  // The axis-aligned halfspace {x : x_axis <= t} used as a covering
  // halfspace; axis defaults to the last coordinate.
  static Halfspace axis(int d, int axis_index, double t, bool upper = true);
};

struct HPolytope {
  std::vector<Halfspace> facets;
};

struct Box {
  Vec lo, hi;
};

struct Ball {
  Vec center;
  double radius = 0.0;
};

// {center + sqrt(shape) u : |u| <= 1}; shape symmetric positive definite.
struct Ellipsoid {
  Vec center;
  Mat shape;
};

struct HalfspaceBody {
  Halfspace h;
};

// Tagged convex set; the universal geometric value of the toolkit.
// Immutable after construction.
class ConvexBody {
 public:
  using Rep = std::variant<HPolytope, Box, Ball, Ellipsoid, HalfspaceBody>;

  ConvexBody(int dim, Rep rep);

  int dim() const { return dim_; }
  const Rep& rep() const { return rep_; }

  bool is_polytope() const { return std::holds_alternative<HPolytope>(rep_); }
  bool is_box() const { return std::holds_alternative<Box>(rep_); }
  bool is_ball() const { return std::holds_alternative<Ball>(rep_); }
  bool is_ellipsoid() const { return std::holds_alternative<Ellipsoid>(rep_); }
  bool is_halfspace() const { return std::holds_alternative<HalfspaceBody>(rep_); }

  static ConvexBody polytope(int d, std::vector<Halfspace> facets);
  static ConvexBody box(Vec lo, Vec hi);
  static ConvexBody ball(Vec center, double radius);
  static ConvexBody ellipsoid(Vec center, Mat shape);
  static ConvexBody halfspace(Halfspace h);
  static ConvexBody unit_box(int d);  // [0,1]^d

  // sup {a.x : x in body}; exact for box/ball/ellipsoid/halfspace-free
  // directions, throws for polytopes (use vertex enumeration instead).
  double support(const Vec& direction) const;

  bool contains_point(const Vec& x, double tol = kGeomTol) const;

  // Halfspace representation. Boxes are exact; balls and ellipsoids are
  // approximated by tangent halfspaces at ball_facets quasi-uniform
  // normals (the approximation circumscribes the body).
  std::vector<Halfspace> to_halfspaces(int ball_facets = 0) const;

 private:
  int dim_;
  Rep rep_;
};

// Default tangent-halfspace count for ball/ellipsoid conversion:
// 2^ceil(log2(32 d)).
int default_ball_facets(int d);

// Quasi-uniform unit directions: equally spaced angles in d=2, a Fibonacci
// sphere in d=3, +-e_i in d=1.
std::vector<Vec> quasi_uniform_directions(int d, int count);

// Ordered family of convex bodies over a shared ambient dimension.
struct Family {
  int dim = 0;
  std::vector<ConvexBody> members;
  double bounding_radius = kDefaultBoundingRadius;

  int size() const { return static_cast<int>(members.size()); }
  void validate() const;
};

// Intersection as an HPolytope: the union of the members' halfspace
// representations. Throws on empty input or dimension mismatch.
ConvexBody intersect(const std::vector<ConvexBody>& bodies, int ball_facets = 0);

// Intersection of the indexed members of a family.
ConvexBody intersect_members(const Family& f, const std::vector<int>& idx, int ball_facets = 0);

inline double unit_ball_volume(int d) {
  switch (d) {
    case 1: return 2.0;
    case 2: return 3.14159265358979323846;
    case 3: return 4.0 / 3.0 * 3.14159265358979323846;
    default: {
      // Gamma recursion; only d<=3 is exercised by the exact pipelines.
      double v = (d % 2 == 0) ? 3.14159265358979323846 : 2.0;
      for (int k = (d % 2 == 0) ? 4 : 3; k <= d; k += 2)
        v *= 2.0 * 3.14159265358979323846 / k;
      return v;
    }
  }
}

}  // namespace helly
