#include "helly/volume.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "helly/lp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace helly {

namespace {

constexpr int kMcShards = 256;

// Single-axis constraint test: x_axis <= bound (sign +1) or >= (sign -1).
struct AxisBound {
  int axis;
  int sign;
  double bound;
};

bool axis_aligned(const std::vector<Halfspace>& hs, std::vector<AxisBound>& out) {
  out.clear();
  for (const auto& h : hs) {
    int nz = -1;
    for (int i = 0; i < h.dim(); ++i) {
      if (h.normal[i] != 0.0) {
        if (nz >= 0) return false;
        nz = i;
      }
    }
    if (nz < 0) return false;
    double c = h.normal[nz];
    out.push_back({nz, c > 0 ? +1 : -1, h.offset / c});
  }
  return true;
}

struct IntervalHull {
  Vec lo, hi;
  bool empty = false;
  bool clip_active = false;
};

IntervalHull interval_hull(const std::vector<AxisBound>& bounds, int d, double clip) {
  IntervalHull r;
  r.lo = Vec::Constant(d, -clip);
  r.hi = Vec::Constant(d, clip);
  for (const auto& b : bounds) {
    if (b.sign > 0) r.hi[b.axis] = std::min(r.hi[b.axis], b.bound);
    else r.lo[b.axis] = std::max(r.lo[b.axis], b.bound);
  }
  for (int i = 0; i < d; ++i) {
    if (r.lo[i] > r.hi[i] + kGeomTol) {
      r.empty = true;
      return r;
    }
    double edge = clip * (1.0 - 1e-9);
    if (r.lo[i] <= -edge || r.hi[i] >= edge) r.clip_active = true;
  }
  return r;
}

// Angular sort + shoelace.
double polygon_area(std::vector<Vec> pts) {
  if (pts.size() < 3) return 0.0;
  Vec c = Vec::Zero(2);
  for (const auto& p : pts) c += p;
  c /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
    return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
  });
  double s = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const Vec& a = pts[i];
    const Vec& b = pts[(i + 1) % pts.size()];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return std::abs(s) / 2.0;
}

double polytope_volume_3d(const std::vector<Vec>& verts, const std::vector<Halfspace>& hs) {
  // Divergence theorem over the facets; planes deduplicated first.
  Vec c0 = Vec::Zero(3);
  for (const auto& v : verts) c0 += v;
  c0 /= static_cast<double>(verts.size());

  std::vector<Halfspace> planes;
  for (const auto& h : hs) {
    Halfspace u = h.normalized();
    bool dup = false;
    for (const auto& q : planes)
      if (u.normal.dot(q.normal) > 1.0 - 1e-10 && std::abs(u.offset - q.offset) <= 1e-7 * (1.0 + std::abs(q.offset)))
        dup = true;
    if (!dup) planes.push_back(u);
  }

  double vol = 0.0;
  for (const auto& pl : planes) {
    std::vector<Vec> face;
    for (const auto& v : verts)
      if (std::abs(pl.normal.dot(v) - pl.offset) <= 1e-6 * (1.0 + std::abs(pl.offset)))
        face.push_back(v);
    if (face.size() < 3) continue;
    Vec fc = Vec::Zero(3);
    for (const auto& v : face) fc += v;
    fc /= static_cast<double>(face.size());
    // In-plane right-handed basis (e1, e2, normal).
    Eigen::Vector3d n3(pl.normal[0], pl.normal[1], pl.normal[2]);
    Eigen::Vector3d e1 = n3.unitOrthogonal();
    Eigen::Vector3d e2 = n3.cross(e1);
    auto in_plane = [&](const Vec& p) {
      return Eigen::Vector3d(p[0] - fc[0], p[1] - fc[1], p[2] - fc[2]);
    };
    std::sort(face.begin(), face.end(), [&](const Vec& a, const Vec& b) {
      return std::atan2(in_plane(a).dot(e2), in_plane(a).dot(e1)) <
             std::atan2(in_plane(b).dot(e2), in_plane(b).dot(e1));
    });
    double area2 = 0.0;
    for (size_t i = 0; i < face.size(); ++i) {
      Eigen::Vector3d a = in_plane(face[i]);
      Eigen::Vector3d b = in_plane(face[(i + 1) % face.size()]);
      area2 += a.cross(b).dot(n3);
    }
    double area = std::abs(area2) / 2.0;
    vol += (pl.offset - pl.normal.dot(c0)) * area;
  }
  return std::max(0.0, vol / 3.0);
}

Vec mc_box_point(std::mt19937_64& rng, int d, double clip) {
  std::uniform_real_distribution<double> u(-clip, clip);
  Vec x(d);
  for (int i = 0; i < d; ++i) x[i] = u(rng);
  return x;
}

long long mc_shard_hits(const ConvexBody& body, long long count, double clip,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  long long hits = 0;
  const int d = body.dim();
  for (long long i = 0; i < count; ++i)
    if (body.contains_point(mc_box_point(rng, d, clip), 0.0)) ++hits;
  return hits;
}

}  // namespace

double VolumeValue::as_number() const {
  switch (kind) {
    case Kind::Finite: return value;
    case Kind::Infinite: return std::numeric_limits<double>::infinity();
    default: return 0.0;
  }
}

VertexEnumeration enumerate_vertices(const std::vector<Halfspace>& hs, int dim,
                                     double clip_radius) {
  std::vector<Halfspace> all;
  all.reserve(hs.size() + 2 * dim);
  for (const auto& h : hs) all.push_back(h.normalized());
  for (int i = 0; i < dim; ++i) {
    all.push_back(Halfspace::axis(dim, i, clip_radius, true));
    all.push_back(Halfspace::axis(dim, i, -clip_radius, false));
  }
  const int m = static_cast<int>(all.size());

  VertexEnumeration out;
  const double edge = clip_radius * (1.0 - 1e-9);
  auto try_vertex = [&](const std::vector<int>& pick) {
    Mat a(dim, dim);
    Vec b(dim);
    for (int r = 0; r < dim; ++r) {
      a.row(r) = all[pick[r]].normal.transpose();
      b[r] = all[pick[r]].offset;
    }
    Eigen::FullPivLU<Mat> lu(a);
    if (!lu.isInvertible()) return;
    Vec x = lu.solve(b);
    for (const auto& h : all)
      if (h.normal.dot(x) > h.offset + 1e-7 * (1.0 + std::abs(h.offset))) return;
    for (const auto& v : out.vertices)
      if ((v - x).norm() <= 1e-7 * (1.0 + x.norm())) return;
    out.vertices.push_back(x);
    for (int i = 0; i < dim; ++i)
      if (std::abs(x[i]) >= edge) out.clip_active = true;
  };
  for_each_combination(m, dim, try_vertex);
  return out;
}

double hull_volume(const std::vector<Vec>& pts, int dim) {
  if (pts.empty()) return 0.0;
  if (dim == 1) {
    double lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  if (dim == 2) return polygon_area(pts);
  throw Error("hull_volume: use polytope facets for d=3");
}

ClippedMeasure clipped_volume(const std::vector<Halfspace>& hs, int dim, double clip_radius) {
  if (clip_radius <= 0) throw Error("clip radius must be positive");
  ClippedMeasure cm;

  std::vector<AxisBound> bounds;
  if (axis_aligned(hs, bounds)) {
    IntervalHull ih = interval_hull(bounds, dim, clip_radius);
    if (ih.empty) return cm;
    cm.feasible = true;
    cm.clip_active = ih.clip_active;
    cm.value = 1.0;
    for (int i = 0; i < dim; ++i) cm.value *= (ih.hi[i] - ih.lo[i]);
    return cm;
  }

  if (dim > 3) throw Error("exact volume requires d <= 3");
  VertexEnumeration ve = enumerate_vertices(hs, dim, clip_radius);
  if (ve.vertices.empty()) {
    std::vector<Halfspace> with_clip = hs;
    for (int i = 0; i < dim; ++i) {
      with_clip.push_back(Halfspace::axis(dim, i, clip_radius, true));
      with_clip.push_back(Halfspace::axis(dim, i, -clip_radius, false));
    }
    cm.feasible = halfspaces_feasible(with_clip, dim);
    cm.value = 0.0;
    return cm;
  }
  cm.feasible = true;
  cm.clip_active = ve.clip_active;
  if (dim == 3) {
    std::vector<Halfspace> all = hs;
    for (int i = 0; i < 3; ++i) {
      all.push_back(Halfspace::axis(3, i, clip_radius, true));
      all.push_back(Halfspace::axis(3, i, -clip_radius, false));
    }
    cm.value = polytope_volume_3d(ve.vertices, all);
  } else {
    cm.value = hull_volume(ve.vertices, dim);
  }
  return cm;
}

VolumeValue volume(const ConvexBody& body, VolumeMode mode, long long samples,
                   double clip_radius, std::uint64_t seed) {
  if (clip_radius <= 0) throw Error("clip radius must be positive");
  if (mode == VolumeMode::MonteCarlo) {
    if (samples < 1) throw Error("monte carlo requires samples >= 1");
    long long hits = mc_hits_parallel(body, samples, clip_radius, seed);
    double box_vol = std::pow(2.0 * clip_radius, body.dim());
    double p = static_cast<double>(hits) / static_cast<double>(samples);
    VolumeValue v = VolumeValue::finite(box_vol * p);
    v.stderr_est = box_vol * std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(samples));
    return v;
  }

  if (body.dim() > 3) throw Error("exact volume requires d <= 3");
  // Closed forms where the representation gives them directly.
  if (body.is_ball()) {
    const auto& b = std::get<Ball>(body.rep());
    return VolumeValue::finite(unit_ball_volume(body.dim()) *
                               std::pow(b.radius, body.dim()));
  }
  if (body.is_ellipsoid()) {
    const auto& e = std::get<Ellipsoid>(body.rep());
    return VolumeValue::finite(unit_ball_volume(body.dim()) *
                               std::sqrt(std::max(0.0, e.shape.determinant())));
  }
  ClippedMeasure cm = clipped_volume(body.to_halfspaces(), body.dim(), clip_radius);
  if (!cm.feasible) return VolumeValue::empty();
  if (cm.clip_active) return VolumeValue::infinite();
  return VolumeValue::finite(cm.value);
}

double clipped_diameter(const std::vector<Halfspace>& hs, int dim, double clip_radius) {
  std::vector<AxisBound> bounds;
  if (axis_aligned(hs, bounds)) {
    IntervalHull ih = interval_hull(bounds, dim, clip_radius);
    if (ih.empty) return 0.0;
    return (ih.hi - ih.lo).norm();
  }
  VertexEnumeration ve = enumerate_vertices(hs, dim, clip_radius);
  double best = 0.0;
  for (size_t i = 0; i < ve.vertices.size(); ++i)
    for (size_t j = i + 1; j < ve.vertices.size(); ++j)
      best = std::max(best, (ve.vertices[i] - ve.vertices[j]).norm());
  return best;
}

double diameter(const ConvexBody& body, double clip_radius) {
  if (body.is_ball()) return 2.0 * std::get<Ball>(body.rep()).radius;
  if (body.is_ellipsoid()) {
    const auto& e = std::get<Ellipsoid>(body.rep());
    Eigen::SelfAdjointEigenSolver<Mat> es(e.shape);
    return 2.0 * std::sqrt(es.eigenvalues().maxCoeff());
  }
  if (body.is_box()) {
    const auto& b = std::get<Box>(body.rep());
    return (b.hi - b.lo).norm();
  }
  VertexEnumeration ve = enumerate_vertices(body.to_halfspaces(), body.dim(), clip_radius);
  if (ve.vertices.empty()) throw Error("diameter of an empty body");
  if (ve.clip_active) throw Error("diameter of an unbounded body");
  double best = 0.0;
  for (size_t i = 0; i < ve.vertices.size(); ++i)
    for (size_t j = i + 1; j < ve.vertices.size(); ++j)
      best = std::max(best, (ve.vertices[i] - ve.vertices[j]).norm());
  return best;
}

long long mc_hits_serial(const ConvexBody& body, long long samples, double clip_radius,
                         std::uint64_t seed) {
  long long hits = 0;
  for (int s = 0; s < kMcShards; ++s) {
    long long count = samples / kMcShards + (s < samples % kMcShards ? 1 : 0);
    hits += mc_shard_hits(body, count, clip_radius, shard_seed(seed, s));
  }
  return hits;
}

long long mc_hits_parallel(const ConvexBody& body, long long samples, double clip_radius,
                           std::uint64_t seed) {
  long long hits = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : hits) schedule(dynamic) \
    num_threads(worker_threads())
#endif
  for (int s = 0; s < kMcShards; ++s) {
    long long count = samples / kMcShards + (s < samples % kMcShards ? 1 : 0);
    hits += mc_shard_hits(body, count, clip_radius, shard_seed(seed, s));
  }
  return hits;
}

}  // namespace helly
