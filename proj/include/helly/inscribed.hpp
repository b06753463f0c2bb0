#pragma once

#include "helly/geometry.hpp"

namespace helly {

// Largest inscribed ball of a bounded polytope-like body, by LP over
// (center, r). Throws on empty interior.
Ball chebyshev_ball(const ConvexBody& body, double clip_radius = kDefaultBoundingRadius);

// Maximum volume inscribed ellipsoid of a bounded body with nonempty
// interior, d <= 3: maximize log det B subject to ||B a_i|| + a_i.c <= b_i
// over symmetric positive definite B, solved by a log-barrier Newton
// method. Returns Ellipsoid(c, B^2). Throws on empty interior, unbounded
// input, or non-convergence within the iteration cap.
Ellipsoid max_inscribed_ellipsoid(const ConvexBody& body, double tol = 1e-9,
                                  double clip_radius = kDefaultBoundingRadius);

// ||B^{-1}(x - center)|| for an ellipsoid given as (center, shape=B^2):
// <= 1 inside, <= factor inside the dilation factor*E about the center.
double ellipsoid_gauge(const Ellipsoid& e, const Vec& x);

}  // namespace helly
