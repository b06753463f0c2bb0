#include "helly/enclosing.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "helly/inscribed.hpp"
#include "helly/volume.hpp"

namespace helly {

namespace {

constexpr double kTau = 2.0 * M_PI;

Vec dir2(double phi) {
  Vec u(2);
  u << std::cos(phi), std::sin(phi);
  return u;
}

// Triangle area from three supporting lines (u_i, h_i); +inf when the
// normals do not positively span the plane or lines are near-parallel.
double triangle_area(const std::array<double, 3>& phi, const std::array<double, 3>& h) {
  // Positive spanning: consecutive gaps < pi when sorted.
  std::array<double, 3> s = phi;
  std::sort(s.begin(), s.end());
  double g1 = s[1] - s[0], g2 = s[2] - s[1], g3 = kTau - (s[2] - s[0]);
  if (g1 >= M_PI - 1e-12 || g2 >= M_PI - 1e-12 || g3 >= M_PI - 1e-12)
    return std::numeric_limits<double>::infinity();
  std::array<Vec, 3> corners;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    double ca = std::cos(phi[i]), sa = std::sin(phi[i]);
    double cb = std::cos(phi[j]), sb = std::sin(phi[j]);
    double det = ca * sb - sa * cb;
    if (std::abs(det) < 1e-12) return std::numeric_limits<double>::infinity();
    Vec p(2);
    p << (h[i] * sb - h[j] * sa) / det, (ca * h[j] - cb * h[i]) / det;
    corners[i] = p;
  }
  double a2 = 0;
  for (int i = 0; i < 3; ++i) {
    const Vec& p = corners[i];
    const Vec& q = corners[(i + 1) % 3];
    a2 += p[0] * q[1] - q[0] * p[1];
  }
  return std::abs(a2) / 2.0;
}

struct ArcPiece {
  int vertex;
  double lo, hi;  // unrolled into [base, base + tau]
};

// Fallback triangle around the bounding box of a point set (used for
// degenerate inputs where no flush edge exists).
ConvexBody bbox_triangle(const std::vector<Vec>& verts, double pad) {
  Vec lo = verts[0], hi = verts[0];
  for (const auto& v : verts) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  lo.array() -= pad;
  hi.array() += pad;
  // Right triangle with legs through (lo) spanning twice the box.
  std::vector<Halfspace> hs;
  hs.push_back(Halfspace::axis(2, 0, lo[0], false));
  hs.push_back(Halfspace::axis(2, 1, lo[1], false));
  Vec n(2);
  n << (hi[1] - lo[1]), (hi[0] - lo[0]);
  double off = n[0] * hi[0] + n[1] * hi[1] - n.dot(lo);  // passes the far corner
  hs.emplace_back(n, n.dot(lo) + off);
  return ConvexBody::polytope(2, hs);
}

EnclosingSimplex min_triangle_2d(const ConvexBody& body, double clip_radius) {
  std::vector<Vec> verts = polygon_vertices_ccw(body, clip_radius);
  if (verts.empty()) throw Error("min_enclosing_simplex: empty body");
  double body_vol = volume(body, VolumeMode::Exact, 0, clip_radius).as_number();
  if (verts.size() < 3 || body_vol <= kGeomTol) {
    auto tri = bbox_triangle(verts, 1e-7);
    return {tri, std::numeric_limits<double>::infinity()};
  }

  const int n = static_cast<int>(verts.size());
  // Edge normals (CCW polygon): rotate edge direction by -pi/2.
  std::vector<double> psi(n);
  for (int k = 0; k < n; ++k) {
    Vec e = verts[(k + 1) % n] - verts[k];
    psi[k] = std::atan2(-e[0], e[1]);
  }

  double best_area = std::numeric_limits<double>::infinity();
  std::array<double, 3> best_phi{}, best_h{};

  for (int flush = 0; flush < n; ++flush) {
    double phi1 = psi[flush];
    double h1 = dir2(phi1).dot(verts[flush]);

    // Vertex normal arcs unrolled into (phi1, phi1 + tau], split at wrap.
    std::vector<ArcPiece> pieces;
    for (int v = 0; v < n; ++v) {
      double lo = psi[(v - 1 + n) % n];
      double hi = psi[v];
      while (hi < lo) hi += kTau;
      while (lo < phi1) {
        lo += kTau;
        hi += kTau;
      }
      while (lo >= phi1 + kTau) {
        lo -= kTau;
        hi -= kTau;
      }
      if (hi <= phi1 + kTau) {
        pieces.push_back({v, lo, hi});
      } else {
        pieces.push_back({v, lo, phi1 + kTau});
        pieces.push_back({v, phi1, hi - kTau});
      }
    }

    auto area_at = [&](const ArcPiece& a, const ArcPiece& b, double p2, double p3) {
      std::array<double, 3> phi{phi1, p2, p3};
      std::array<double, 3> h{h1, dir2(p2).dot(verts[a.vertex]), dir2(p3).dot(verts[b.vertex])};
      // Keep angles in a canonical window for the span test.
      phi[1] = std::fmod(p2, kTau);
      phi[2] = std::fmod(p3, kTau);
      if (phi[1] < 0) phi[1] += kTau;
      if (phi[2] < 0) phi[2] += kTau;
      double p0 = std::fmod(phi1, kTau);
      if (p0 < 0) p0 += kTau;
      phi[0] = p0;
      return triangle_area(phi, h);
    };

    for (const auto& a : pieces) {
      for (const auto& b : pieces) {
        if (b.hi <= a.lo + 1e-12) continue;
        double b_lo = std::max(b.lo, a.lo);
        // Coarse grid, then alternating golden-section refinement.
        const int grid = 9;
        double cur2 = 0, cur3 = 0, cur = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= grid; ++i)
          for (int j = 0; j <= grid; ++j) {
            double p2 = a.lo + (a.hi - a.lo) * i / grid;
            double p3 = b_lo + (b.hi - b_lo) * j / grid;
            if (p3 <= p2 + 1e-12) continue;
            double ar = area_at(a, b, p2, p3);
            if (ar < cur) {
              cur = ar;
              cur2 = p2;
              cur3 = p3;
            }
          }
        if (!std::isfinite(cur)) continue;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int round = 0; round < 14; ++round) {
          // Golden section in p2 with p3 fixed, then vice versa.
          for (int axis = 0; axis < 2; ++axis) {
            double lo = axis == 0 ? a.lo : std::max(b_lo, cur2 + 1e-12);
            double hi = axis == 0 ? std::min(a.hi, cur3 - 1e-12) : b.hi;
            if (hi <= lo) continue;
            double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
            double f1 = axis == 0 ? area_at(a, b, x1, cur3) : area_at(a, b, cur2, x1);
            double f2 = axis == 0 ? area_at(a, b, x2, cur3) : area_at(a, b, cur2, x2);
            for (int it = 0; it < 40; ++it) {
              if (f1 <= f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = axis == 0 ? area_at(a, b, x1, cur3) : area_at(a, b, cur2, x1);
              } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = axis == 0 ? area_at(a, b, x2, cur3) : area_at(a, b, cur2, x2);
              }
            }
            double xm = (lo + hi) / 2;
            double fm = axis == 0 ? area_at(a, b, xm, cur3) : area_at(a, b, cur2, xm);
            if (fm < cur) {
              cur = fm;
              (axis == 0 ? cur2 : cur3) = xm;
            }
          }
        }
        if (cur < best_area) {
          best_area = cur;
          best_phi = {phi1, cur2, cur3};
          best_h = {h1, dir2(cur2).dot(verts[a.vertex]), dir2(cur3).dot(verts[b.vertex])};
        }
      }
    }
  }

  if (!std::isfinite(best_area)) throw Error("min_enclosing_simplex: search failed");
  std::vector<Halfspace> hs;
  for (int i = 0; i < 3; ++i) hs.emplace_back(dir2(best_phi[i]), best_h[i]);
  return {ConvexBody::polytope(2, hs), best_area / body_vol};
}

EnclosingSimplex enclosing_simplex_3d(const ConvexBody& body, double clip_radius) {
  auto ve = enumerate_vertices(body.to_halfspaces(), 3, clip_radius);
  if (ve.vertices.empty()) throw Error("min_enclosing_simplex: empty body");
  if (ve.clip_active) throw Error("min_enclosing_simplex: unbounded body");

  // Frame from the inscribed ellipsoid when available; identity otherwise.
  Mat frame = Mat::Identity(3, 3);
  Vec center = Vec::Zero(3);
  try {
    Ellipsoid e = max_inscribed_ellipsoid(body, 1e-7, clip_radius);
    Eigen::SelfAdjointEigenSolver<Mat> es(e.shape);
    frame = es.operatorInverseSqrt();
    center = e.center;
  } catch (const Error&) {
  }

  Vec lo = Vec::Constant(3, 1e300), hi = Vec::Constant(3, -1e300);
  for (const auto& v : ve.vertices) {
    Vec y = frame * (v - center);
    lo = lo.cwiseMin(y);
    hi = hi.cwiseMax(y);
  }
  double pad = 1e-9 * (1.0 + (hi - lo).norm());
  lo.array() -= pad;
  hi.array() += pad;

  // Simplex around the box in y-coordinates: y_i >= lo_i and
  // sum_i (y_i - lo_i)/(hi_i - lo_i) <= 3; pull back through y = F(x - c).
  std::vector<Halfspace> hs_y;
  for (int i = 0; i < 3; ++i) {
    Vec ni = Vec::Zero(3);
    ni[i] = -1.0;
    hs_y.emplace_back(ni, -lo[i]);
  }
  Vec nsum(3);
  double off = 3.0;
  for (int i = 0; i < 3; ++i) {
    nsum[i] = 1.0 / (hi[i] - lo[i]);
    off += lo[i] / (hi[i] - lo[i]);
  }
  hs_y.emplace_back(nsum, off);

  std::vector<Halfspace> hs;
  for (const auto& h : hs_y) {
    Vec nx = frame.transpose() * h.normal;
    hs.emplace_back(nx, h.offset + nx.dot(center));
  }
  ConvexBody simplex = ConvexBody::polytope(3, hs);
  double bv = volume(body, VolumeMode::Exact, 0, clip_radius).as_number();
  double sv = volume(simplex, VolumeMode::Exact, 0, clip_radius).as_number();
  return {simplex, bv > kGeomTol ? sv / bv : std::numeric_limits<double>::infinity()};
}

}  // namespace

std::vector<Vec> polygon_vertices_ccw(const ConvexBody& body, double clip_radius) {
  if (body.dim() != 2) throw Error("polygon_vertices_ccw: d must be 2");
  auto ve = enumerate_vertices(body.to_halfspaces(), 2, clip_radius);
  if (ve.clip_active) throw Error("polygon_vertices_ccw: unbounded body");
  auto& pts = ve.vertices;
  if (pts.size() < 2) return pts;
  Vec c = Vec::Zero(2);
  for (const auto& p : pts) c += p;
  c /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
    return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
  });
  return pts;
}

EnclosingSimplex min_enclosing_simplex(const ConvexBody& body, double clip_radius) {
  if (body.dim() == 2) return min_triangle_2d(body, clip_radius);
  if (body.dim() == 3) return enclosing_simplex_3d(body, clip_radius);
  throw Error("min_enclosing_simplex: d must be 2 or 3");
}

GaleSimplex gale_enclosing_simplex(const ConvexBody& body, double clip_radius) {
  const int d = body.dim();
  if (d != 2 && d != 3) throw Error("gale_enclosing_simplex: d must be 2 or 3");
  auto ve = enumerate_vertices(body.to_halfspaces(), d, clip_radius);
  if (ve.vertices.empty()) throw Error("gale_enclosing_simplex: empty body");
  if (ve.clip_active) throw Error("gale_enclosing_simplex: unbounded body");

  Vec c = Vec::Zero(d);
  for (const auto& v : ve.vertices) c += v;
  c /= static_cast<double>(ve.vertices.size());
  double r = 0;
  for (const auto& v : ve.vertices) r = std::max(r, (v - c).norm());
  r = std::max(r, 1e-12);

  // Face normals of a regular simplex with insphere radius r about c.
  std::vector<Vec> normals;
  if (d == 2) {
    for (int k = 0; k < 3; ++k) {
      Vec u(2);
      double phi = M_PI / 2 + k * kTau / 3;
      u << std::cos(phi), std::sin(phi);
      normals.push_back(u);
    }
  } else {
    const double s = 1.0 / std::sqrt(3.0);
    for (auto [x, y, z] : {std::array<double, 3>{1, 1, 1},
                           {1, -1, -1},
                           {-1, 1, -1},
                           {-1, -1, 1}}) {
      Vec u(3);
      u << x * s, y * s, z * s;
      normals.push_back(u);
    }
  }
  std::vector<Halfspace> hs;
  for (const auto& u : normals) hs.emplace_back(u, u.dot(c) + r);
  ConvexBody simplex = ConvexBody::polytope(d, hs);

  double body_diam = diameter(body, clip_radius);
  double ratio = body_diam > kGeomTol
                     ? diameter(simplex, clip_radius * 10) / body_diam
                     : std::numeric_limits<double>::infinity();
  if (std::isfinite(ratio) && ratio > 4.0 * d)
    throw Error("gale_enclosing_simplex: ratio bound violated");
  return {simplex, ratio};
}

}  // namespace helly
