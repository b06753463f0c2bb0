#pragma once

#include "helly/geometry.hpp"

namespace helly {

// One full-dimensional cell of a hyperplane arrangement: the sign of each
// hyperplane (+1 for normal.x > offset) plus an interior witness point.
struct ArrangementRegion {
  std::vector<int> signs;
  Vec witness;
};

struct Arrangement {
  std::vector<Halfspace> hyperplanes;  // boundaries a.x = b
  std::vector<ArrangementRegion> regions;
};

// Enumerates all sign vectors whose open region meets the box, by an LP
// with a strict interior margin on the hyperplanes. At most 12 hyperplanes
// (the search is exponential in their number).
Arrangement build_arrangement(const std::vector<Halfspace>& hyperplanes, const ConvexBody& box);

// sum_{k=0}^{d} C(n,k): the maximum number of regions n hyperplanes cut
// R^d into.
long long region_count_formula(int n, int d);

// Halfspace list of one region (its sign-adjusted hyperplanes), without
// the box.
std::vector<Halfspace> region_halfspaces(const Arrangement& a, int region_index);

// A box guaranteed to meet every region of a generic line arrangement in
// d=2: every cell's closure contains a pairwise crossing (or, for n=1,
// touches the line), so a box enclosing all crossings with a margin works.
ConvexBody arrangement_box_2d(const std::vector<Halfspace>& hyperplanes, double margin = 10.0);

}  // namespace helly
