#include <doctest.h>

#include <random>

#include "helly/volume.hpp"
#include "oracles.hpp"

using namespace helly;

namespace {
Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}
Vec v3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

ConvexBody triangle(const Vec& a, const Vec& b, const Vec& c) {
  return ConvexBody::polytope(2, oracle::hull_halfspaces_2d({a, b, c}));
}
}  // namespace

TEST_CASE("unit square volume") {
  CHECK(volume(ConvexBody::unit_box(2)).value == doctest::Approx(1.0));
  CHECK(volume(ConvexBody::unit_box(3)).value == doctest::Approx(1.0));
}

TEST_CASE("three of four square halfplanes have infinite volume") {
  // {x >= 0, x <= 1, y >= 0} is unbounded: clipping becomes active.
  std::vector<Halfspace> hs = {Halfspace::axis(2, 0, 1, true), Halfspace::axis(2, 0, 0, false),
                               Halfspace::axis(2, 1, 0, false)};
  auto v = volume(ConvexBody::polytope(2, hs));
  CHECK(v.is_infinite());
}

TEST_CASE("empty vs degenerate") {
  // x <= 0 and x >= 1: empty.
  std::vector<Halfspace> empty_hs = {Halfspace::axis(2, 0, 0, true),
                                     Halfspace::axis(2, 0, 1, false),
                                     Halfspace::axis(2, 1, 1, true),
                                     Halfspace::axis(2, 1, 0, false)};
  CHECK(volume(ConvexBody::polytope(2, empty_hs)).is_empty());

  // Flat box [0,1] x {0}: nonempty, volume zero.
  auto flat = ConvexBody::box(v2(0, 0), v2(1, 0));
  auto v = volume(flat);
  CHECK(v.is_finite());
  CHECK(v.value == doctest::Approx(0.0));

  // Same distinction through a rotated (non-axis-aligned) representation.
  Vec n(2);
  n << 1, 1;
  std::vector<Halfspace> diag = {Halfspace(n, 1.0), Halfspace(-n, -1.0),
                                 Halfspace::axis(2, 0, 0.7, true),
                                 Halfspace::axis(2, 0, 0.2, false)};
  auto seg = volume(ConvexBody::polytope(2, diag));
  CHECK(seg.is_finite());
  CHECK(seg.value == doctest::Approx(0.0));
}

TEST_CASE("random triangles match the shoelace oracle") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int it = 0; it < 50; ++it) {
    Vec a = v2(u(rng), u(rng)), b = v2(u(rng), u(rng)), c = v2(u(rng), u(rng));
    double want = oracle::shoelace({a, b, c});
    if (want < 1e-3) continue;
    double got = volume(triangle(a, b, c)).value;
    CHECK(got == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("axis-aligned fast path equals the general path") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int it = 0; it < 40; ++it) {
    Vec lo = v2(u(rng), u(rng));
    Vec hi = v2(lo[0] + std::abs(u(rng)), lo[1] + std::abs(u(rng)));
    auto box = ConvexBody::box(lo, hi);
    auto hs = box.to_halfspaces();
    double fast = clipped_volume(hs, 2, 100.0).value;
    // Rotate the representation by epsilon-free identity shear to force
    // the vertex enumeration path: append a redundant oblique halfspace.
    Vec n(2);
    n << 1, 1;
    hs.emplace_back(n, n.dot(hi) + 5.0);
    double general = clipped_volume(hs, 2, 100.0).value;
    CHECK(fast == doctest::Approx(general).epsilon(1e-9));
  }
}

TEST_CASE("volume of a 3d simplex") {
  // x,y,z >= 0, x+y+z <= 1 has volume 1/6.
  Vec n = Vec::Ones(3);
  std::vector<Halfspace> hs = {Halfspace(n, 1.0), Halfspace::axis(3, 0, 0, false),
                               Halfspace::axis(3, 1, 0, false), Halfspace::axis(3, 2, 0, false)};
  CHECK(volume(ConvexBody::polytope(3, hs)).value == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("monotonicity of intersection volume") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int it = 0; it < 25; ++it) {
    std::vector<ConvexBody> bodies;
    for (int i = 0; i < 4; ++i) {
      Vec lo = v2(u(rng), u(rng));
      bodies.push_back(ConvexBody::box(lo, v2(lo[0] + 1 + u(rng), lo[1] + 1 + u(rng))));
    }
    auto all = volume(intersect(bodies));
    bodies.pop_back();
    auto fewer = volume(intersect(bodies));
    if (fewer.is_infinite()) continue;
    CHECK(all.as_number() <= fewer.as_number() + 1e-9);
  }
}

TEST_CASE("monte carlo agrees with exact within 3 stderr on most seeds") {
  std::mt19937_64 rng(2024);
  int ok = 0, total = 0;
  for (int it = 0; it < 20; ++it) {
    auto poly = oracle::random_polygon(rng, 8, 0.0, 8.0);
    double exact = volume(poly).value;
    if (exact < 1.0) continue;
    auto mc = volume(poly, VolumeMode::MonteCarlo, 100000, 10.0, 1000 + it);
    REQUIRE(mc.stderr_est.has_value());
    ++total;
    if (std::abs(mc.value - exact) <= 3.0 * *mc.stderr_est) ++ok;
  }
  REQUIRE(total >= 10);
  CHECK(ok >= (total * 95) / 100);
}

TEST_CASE("mc kernels: serial reference equals parallel") {
  auto poly = ConvexBody::ball(v2(1, 1), 2.0);
  for (long long n : {999LL, 10000LL, 100001LL}) {
    CHECK(mc_hits_serial(poly, n, 4.0, 77) == mc_hits_parallel(poly, n, 4.0, 77));
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(ConvexBody::unit_box(2)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(diameter(ConvexBody::ball(v2(0, 0), 3.0)) == doctest::Approx(6.0));
  Mat shape(2, 2);
  shape << 9, 0, 0, 1;
  CHECK(diameter(ConvexBody::ellipsoid(v2(5, 5), shape)) == doctest::Approx(6.0));

  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    std::uniform_real_distribution<double> u(0.0, 6.0);
    std::vector<Vec> pts;
    for (int i = 0; i < 7; ++i) pts.push_back(v2(u(rng), u(rng)));
    auto poly = ConvexBody::polytope(2, oracle::hull_halfspaces_2d(pts));
    // Hull diameter equals max pairwise distance over the generating set.
    CHECK(diameter(poly) == doctest::Approx(oracle::brute_diameter(pts)).epsilon(1e-7));
  }

  CHECK_THROWS(diameter(ConvexBody::halfspace(Halfspace::axis(2, 0, 1, true))));
}

TEST_CASE("diameter of intersection bounded by members") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int it = 0; it < 15; ++it) {
    std::vector<ConvexBody> bodies;
    double min_diam = 1e100;
    for (int i = 0; i < 3; ++i) {
      Vec lo = v2(u(rng), u(rng));
      auto b = ConvexBody::box(lo, v2(lo[0] + 1 + u(rng), lo[1] + 1 + u(rng)));
      min_diam = std::min(min_diam, diameter(b));
      bodies.push_back(b);
    }
    auto inter = intersect(bodies);
    if (volume(inter).is_empty()) continue;
    CHECK(diameter(inter) <= min_diam + 1e-9);
  }
}

TEST_CASE("volume mode preconditions") {
  CHECK_THROWS(volume(ConvexBody::unit_box(2), VolumeMode::Exact, 100, -1.0));
  CHECK_THROWS(volume(ConvexBody::unit_box(2), VolumeMode::MonteCarlo, 0));
  Vec lo = Vec::Zero(4), hi = Vec::Ones(4);
  CHECK_THROWS(volume(ConvexBody::box(lo, hi)));
}
