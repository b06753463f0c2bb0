#include <doctest.h>

#include <random>

#include "helly/enclosing.hpp"
#include "helly/volume.hpp"
#include "oracles.hpp"

using namespace helly;

namespace {
Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

bool simplex_contains(const ConvexBody& simplex, const std::vector<Vec>& pts, double tol) {
  for (const auto& p : pts)
    if (!simplex.contains_point(p, tol)) return false;
  return true;
}

// Independent oracle: dense double grid over supporting-line angles for
// each flush edge, then local refinement by shrinking grids.
double min_triangle_oracle(const std::vector<Vec>& verts) {
  const int n = static_cast<int>(verts.size());
  auto support = [&](double phi) {
    double best = -1e300;
    for (const auto& v : verts) best = std::max(best, v[0] * std::cos(phi) + v[1] * std::sin(phi));
    return best;
  };
  auto area = [&](double p1, double p2, double p3) {
    // The three support halfplanes bound a triangle only when the normals
    // positively span the plane.
    double s[3];
    s[0] = std::fmod(p1, 2 * M_PI);
    s[1] = std::fmod(p2, 2 * M_PI);
    s[2] = std::fmod(p3, 2 * M_PI);
    for (double& x : s)
      if (x < 0) x += 2 * M_PI;
    std::sort(s, s + 3);
    if (s[1] - s[0] >= M_PI - 1e-9 || s[2] - s[1] >= M_PI - 1e-9 ||
        2 * M_PI - (s[2] - s[0]) >= M_PI - 1e-9)
      return 1e300;
    double h1 = support(p1), h2 = support(p2), h3 = support(p3);
    double phs[3] = {p1, p2, p3}, hs[3] = {h1, h2, h3};
    Eigen::Vector2d c[3];
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3;
      double det = std::cos(phs[i]) * std::sin(phs[j]) - std::sin(phs[i]) * std::cos(phs[j]);
      if (std::abs(det) < 1e-9) return 1e300;
      c[i][0] = (hs[i] * std::sin(phs[j]) - hs[j] * std::sin(phs[i])) / det;
      c[i][1] = (std::cos(phs[i]) * hs[j] - std::cos(phs[j]) * hs[i]) / det;
    }
    double a2 = 0;
    for (int i = 0; i < 3; ++i) a2 += c[i][0] * c[(i + 1) % 3][1] - c[(i + 1) % 3][0] * c[i][1];
    double a = std::abs(a2) / 2;
    // validity: all vertices inside
    for (const auto& v : verts) {
      for (int i = 0; i < 3; ++i)
        if (v[0] * std::cos(phs[i]) + v[1] * std::sin(phs[i]) > hs[i] + 1e-9) return 1e300;
    }
    return a;
  };
  double best = 1e300;
  for (int e = 0; e < n; ++e) {
    Eigen::Vector2d d = verts[(e + 1) % n] - verts[e];
    double p1 = std::atan2(-d[0], d[1]);
    double w2 = 2 * M_PI / 240;
    double b2 = 0, b3 = 0;
    double local = 1e300;
    for (int i = 1; i < 240; ++i)
      for (int j = i + 1; j < 240; ++j) {
        double a = area(p1, p1 + i * w2, p1 + j * w2);
        if (a < local) {
          local = a;
          b2 = p1 + i * w2;
          b3 = p1 + j * w2;
        }
      }
    // refine
    double step = w2;
    for (int round = 0; round < 40; ++round) {
      bool improved = false;
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          double a = area(p1, b2 + di * step, b3 + dj * step);
          if (a < local) {
            local = a;
            b2 += di * step;
            b3 += dj * step;
            improved = true;
          }
        }
      if (!improved) step /= 2;
      if (step < 1e-12) break;
    }
    best = std::min(best, local);
  }
  return best;
}
}  // namespace

TEST_CASE("triangle input returns itself") {
  auto tri = ConvexBody::polytope(2, oracle::hull_halfspaces_2d({v2(0, 0), v2(4, 0), v2(1, 3)}));
  auto r = min_enclosing_simplex(tri);
  CHECK(r.volume_ratio == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("unit square needs a triangle of area 2") {
  auto r = min_enclosing_simplex(ConvexBody::unit_box(2));
  double area = volume(r.simplex).value;
  CHECK(area == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(r.volume_ratio == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("containment and flush-search optimality on random polygons") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 12; ++it) {
    auto poly = oracle::random_polygon(rng, 4 + it % 5, -3.0, 3.0);
    auto verts = polygon_vertices_ccw(poly);
    if (verts.size() < 3) continue;
    auto r = min_enclosing_simplex(poly);
    CHECK(simplex_contains(r.simplex, verts, 1e-7));
    double want = min_triangle_oracle(verts);
    double got = volume(r.simplex).value;
    CHECK(got == doctest::Approx(want).epsilon(1e-5));
    // classical flush bound used as a regression threshold
    CHECK(r.volume_ratio <= 2.0 + 1e-6);
  }
}

TEST_CASE("3d heuristic simplex contains the body") {
  auto cube = ConvexBody::unit_box(3);
  auto r = min_enclosing_simplex(cube);
  auto verts = enumerate_vertices(cube.to_halfspaces(), 3, 1e6).vertices;
  CHECK(simplex_contains(r.simplex, verts, 1e-6));
  CHECK(r.volume_ratio >= 1.0);
  CHECK(std::isfinite(r.volume_ratio));
}

TEST_CASE("gale simplex: ball input") {
  // The bounding ball of the 64-gon is essentially the unit ball.
  auto poly = ConvexBody::polytope(2, ConvexBody::ball(v2(0, 0), 1.0).to_halfspaces(64));
  auto g = gale_enclosing_simplex(poly);
  auto verts = enumerate_vertices(poly.to_halfspaces(), 2, 1e6).vertices;
  CHECK(simplex_contains(g.simplex, verts, 1e-7));
  CHECK(g.diameter_ratio <= 8.0);
}

TEST_CASE("gale simplex: thin box keeps the endpoints") {
  auto thin = ConvexBody::box(v2(0, 0), v2(1, 0.01));
  auto g = gale_enclosing_simplex(thin);
  CHECK(g.simplex.contains_point(v2(0, 0), 1e-9));
  CHECK(g.simplex.contains_point(v2(1, 0.01), 1e-9));
  CHECK(g.diameter_ratio <= 8.0);
}

TEST_CASE("gale simplex on 20 random polygons: containment and ratio") {
  std::mt19937_64 rng(2025);
  for (int it = 0; it < 20; ++it) {
    auto poly = oracle::random_polygon(rng, 5 + it % 4, 0.0, 5.0);
    auto verts = polygon_vertices_ccw(poly);
    if (verts.size() < 3) continue;
    auto g = gale_enclosing_simplex(poly);
    CHECK(simplex_contains(g.simplex, verts, 1e-7));
    CHECK(g.diameter_ratio <= 8.0);
  }
}

TEST_CASE("degenerate input still yields a containing triangle") {
  auto seg = ConvexBody::box(v2(0, 0), v2(1, 0));
  auto r = min_enclosing_simplex(seg);
  CHECK(r.simplex.contains_point(v2(0, 0), 1e-6));
  CHECK(r.simplex.contains_point(v2(1, 0), 1e-6));
  CHECK(std::isinf(r.volume_ratio));
}
