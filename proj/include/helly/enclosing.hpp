#pragma once

#include "helly/geometry.hpp"

namespace helly {

struct EnclosingSimplex {
  ConvexBody simplex;
  double volume_ratio;  // vol(simplex) / vol(body); +inf for flat bodies
};

// Smallest enclosing simplex. d=2: exact minimal-area triangle (one side
// flush with a polygon edge, the other two supporting lines found by a
// rotating search over the vertex normal arcs). d=3: heuristic simplex
// circumscribed about the inscribed ellipsoid's bounding box; containment
// always holds, optimality is not claimed.
EnclosingSimplex min_enclosing_simplex(const ConvexBody& body,
                                       double clip_radius = kDefaultBoundingRadius);

struct GaleSimplex {
  ConvexBody simplex;
  double diameter_ratio;  // diam(simplex) / diam(body)
};

// Regular simplex circumscribed about a bounding ball of the body; the
// ratio is at most sqrt(2d(d+1)) < 4d because the ball center lies in the
// body's hull.
GaleSimplex gale_enclosing_simplex(const ConvexBody& body,
                                   double clip_radius = kDefaultBoundingRadius);

// CCW-ordered vertices of a bounded 2d body.
std::vector<Vec> polygon_vertices_ccw(const ConvexBody& body,
                                      double clip_radius = kDefaultBoundingRadius);

}  // namespace helly
