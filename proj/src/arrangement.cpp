#include "helly/arrangement.hpp"

#include "helly/lp.hpp"

namespace helly {

long long region_count_formula(int n, int d) {
  if (n < 0 || d < 1) throw Error("region_count_formula: n >= 0 and d >= 1 required");
  long long total = 0;
  for (int k = 0; k <= std::min(n, d); ++k) total += binomial(n, k);
  return total;
}

std::vector<Halfspace> region_halfspaces(const Arrangement& a, int region_index) {
  const auto& region = a.regions.at(region_index);
  std::vector<Halfspace> hs;
  for (size_t i = 0; i < a.hyperplanes.size(); ++i) {
    Halfspace h = a.hyperplanes[i].normalized();
    if (region.signs[i] > 0) hs.emplace_back(-h.normal, -h.offset);
    else hs.push_back(h);
  }
  return hs;
}

ConvexBody arrangement_box_2d(const std::vector<Halfspace>& hyperplanes, double margin) {
  double extent = margin;
  for (const auto& h : hyperplanes)
    extent = std::max(extent, std::abs(h.normalized().offset) + margin);
  const int n = static_cast<int>(hyperplanes.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Halfspace a = hyperplanes[i].normalized();
      Halfspace b = hyperplanes[j].normalized();
      double det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
      if (std::abs(det) < 1e-12) continue;
      double x = (a.offset * b.normal[1] - b.offset * a.normal[1]) / det;
      double y = (a.normal[0] * b.offset - b.normal[0] * a.offset) / det;
      extent = std::max({extent, std::abs(x) + margin, std::abs(y) + margin});
    }
  Vec lo(2), hi(2);
  lo << -extent, -extent;
  hi << extent, extent;
  return ConvexBody::box(lo, hi);
}

Arrangement build_arrangement(const std::vector<Halfspace>& hyperplanes, const ConvexBody& box) {
  const int n = static_cast<int>(hyperplanes.size());
  if (n < 1 || n > 12) throw Error("build_arrangement: 1 <= n <= 12 hyperplanes required");
  const int d = box.dim();
  Arrangement arr;
  for (const auto& h : hyperplanes) {
    if (h.dim() != d) throw Error("build_arrangement: dimension mismatch");
    arr.hyperplanes.push_back(h.normalized());
  }
  std::vector<Halfspace> box_hs = box.to_halfspaces();

  // Margin LP per sign vector: maximize r subject to
  //   s_i (a_i.x - b_i) >= r on the hyperplanes, and x in the box.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    LpProblem p;
    p.num_vars = d + 1;
    p.objective = Vec::Zero(d + 1);
    p.objective[d] = -1.0;
    p.free_vars.assign(d + 1, true);
    p.free_vars[d] = false;
    for (int i = 0; i < n; ++i) {
      double s = (mask >> i) & 1 ? 1.0 : -1.0;
      Vec a(d + 1);
      a.head(d) = -s * arr.hyperplanes[i].normal;
      a[d] = 1.0;
      p.add_row(a, '<', -s * arr.hyperplanes[i].offset);
    }
    for (const auto& h : box_hs) {
      Halfspace u = h.normalized();
      Vec a(d + 1);
      a.head(d) = u.normal;
      a[d] = 0.0;
      p.add_row(a, '<', u.offset);
    }
    {
      Vec a = Vec::Zero(d + 1);
      a[d] = 1.0;
      p.add_row(a, '<', 1.0);  // bound the margin
    }
    auto sol = solve_lp(p);
    if (sol.status != LpStatus::Optimal || sol.x[d] <= 1e-7) continue;
    ArrangementRegion region;
    region.signs.resize(n);
    for (int i = 0; i < n; ++i) region.signs[i] = (mask >> i) & 1 ? 1 : -1;
    region.witness = sol.x.head(d);
    arr.regions.push_back(std::move(region));
  }
  return arr;
}

}  // namespace helly
