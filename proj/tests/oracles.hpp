// Independent oracles for property tests. Everything here recomputes
// results through a different route than the library code it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "helly/geometry.hpp"

namespace oracle {

using helly::Mat;
using helly::Vec;

// Shoelace area of a polygon given in order.
inline double shoelace(const std::vector<Vec>& poly) {
  double s = 0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec& a = poly[i];
    const Vec& b = poly[(i + 1) % n];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return std::abs(s) / 2.0;
}

// O(n^2) max pairwise distance.
inline double brute_diameter(const std::vector<Vec>& pts) {
  double best = 0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, (pts[i] - pts[j]).norm());
  return best;
}

// Halfspace list of the convex hull of 2d points (gift wrapping), each
// facet oriented to contain the hull.
inline std::vector<helly::Halfspace> hull_halfspaces_2d(std::vector<Vec> pts) {
  // Andrew monotone chain.
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec& a, const Vec& b) { return (a - b).norm() < 1e-12; }),
            pts.end());
  auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  std::vector<helly::Halfspace> hs;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Vec& a = hull[i];
    const Vec& b = hull[(i + 1) % hull.size()];
    Vec n(2);
    n << (b[1] - a[1]), -(b[0] - a[0]);  // outward for CCW hull
    hs.emplace_back(n, n.dot(a));
  }
  return hs;
}

// Random convex polygon: hull of k random points in [lo,hi]^2.
inline helly::ConvexBody random_polygon(std::mt19937_64& rng, int k, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<Vec> pts;
  for (int i = 0; i < k; ++i) {
    Vec p(2);
    p << u(rng), u(rng);
    pts.push_back(p);
  }
  return helly::ConvexBody::polytope(2, hull_halfspaces_2d(pts));
}

// Vertices of a body's polygon (for shoelace cross-checks) computed via a
// fresh hull of the library's vertex enumeration would not be independent;
// instead tests that need ordered vertices build polygons from points they
// generated themselves.

}  // namespace oracle
