#include "helly/geometry.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace helly {

Halfspace::Halfspace(Vec n, double b) : normal(std::move(n)), offset(b) {
  if (normal.size() == 0 || normal.norm() < kGeomTol)
    throw Error("halfspace normal must be nonzero");
}

Halfspace Halfspace::normalized() const {
  double s = normal.norm();
  return Halfspace(normal / s, offset / s);
}

Halfspace Halfspace::axis(int d, int axis_index, double t, bool upper) {
  Vec n = Vec::Zero(d);
  n[axis_index] = upper ? 1.0 : -1.0;
  return Halfspace(std::move(n), upper ? t : -t);
}

ConvexBody::ConvexBody(int dim, Rep rep) : dim_(dim), rep_(std::move(rep)) {
  if (dim_ < 1) throw Error("dimension must be >= 1");
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, HPolytope>) {
          for (const auto& h : r.facets)
            if (h.dim() != dim_) throw Error("facet dimension mismatch");
        } else if constexpr (std::is_same_v<T, Box>) {
          if (r.lo.size() != dim_ || r.hi.size() != dim_)
            throw Error("box corner dimension mismatch");
          for (int i = 0; i < dim_; ++i)
            if (r.lo[i] > r.hi[i] + kGeomTol) throw Error("box has min > max");
        } else if constexpr (std::is_same_v<T, Ball>) {
          if (r.center.size() != dim_) throw Error("ball center dimension mismatch");
          if (r.radius < 0) throw Error("ball radius must be >= 0");
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          if (r.center.size() != dim_ || r.shape.rows() != dim_ || r.shape.cols() != dim_)
            throw Error("ellipsoid dimension mismatch");
          if ((r.shape - r.shape.transpose()).norm() > 1e-7 * (1.0 + r.shape.norm()))
            throw Error("ellipsoid shape matrix must be symmetric");
          Eigen::SelfAdjointEigenSolver<Mat> es(r.shape);
          if (es.eigenvalues().minCoeff() <= 0)
            throw Error("ellipsoid shape matrix must be positive definite");
        } else if constexpr (std::is_same_v<T, HalfspaceBody>) {
          if (r.h.dim() != dim_) throw Error("halfspace dimension mismatch");
        }
      },
      rep_);
}

ConvexBody ConvexBody::polytope(int d, std::vector<Halfspace> facets) {
  return ConvexBody(d, HPolytope{std::move(facets)});
}
ConvexBody ConvexBody::box(Vec lo, Vec hi) {
  int d = static_cast<int>(lo.size());
  return ConvexBody(d, Box{std::move(lo), std::move(hi)});
}
ConvexBody ConvexBody::ball(Vec center, double radius) {
  int d = static_cast<int>(center.size());
  return ConvexBody(d, Ball{std::move(center), radius});
}
ConvexBody ConvexBody::ellipsoid(Vec center, Mat shape) {
  int d = static_cast<int>(center.size());
  return ConvexBody(d, Ellipsoid{std::move(center), std::move(shape)});
}
ConvexBody ConvexBody::halfspace(Halfspace h) {
  int d = h.dim();
  return ConvexBody(d, HalfspaceBody{std::move(h)});
}
ConvexBody ConvexBody::unit_box(int d) {
  return box(Vec::Zero(d), Vec::Ones(d));
}

double ConvexBody::support(const Vec& direction) const {
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Box>) {
          double s = 0;
          for (int i = 0; i < dim_; ++i)
            s += direction[i] >= 0 ? direction[i] * r.hi[i] : direction[i] * r.lo[i];
          return s;
        } else if constexpr (std::is_same_v<T, Ball>) {
          return direction.dot(r.center) + r.radius * direction.norm();
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          // h(a) = a.c + ||B a|| with B = sqrt(shape).
          Eigen::SelfAdjointEigenSolver<Mat> es(r.shape);
          Mat b = es.operatorSqrt();
          return direction.dot(r.center) + (b * direction).norm();
        } else if constexpr (std::is_same_v<T, HalfspaceBody>) {
          // Finite only along +normal.
          Vec n = r.h.normal / r.h.normal.norm();
          Vec res = direction - direction.dot(n) * n;
          if (res.norm() > kGeomTol || direction.dot(n) < 0)
            return std::numeric_limits<double>::infinity();
          return direction.dot(n) * r.h.offset / r.h.normal.norm();
        } else {
          throw Error("support of an HPolytope requires vertex enumeration");
        }
      },
      rep_);
}

bool ConvexBody::contains_point(const Vec& x, double tol) const {
  return std::visit(
      [&](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, HPolytope>) {
          for (const auto& h : r.facets) {
            double s = h.normal.norm();
            if (h.normal.dot(x) > h.offset + tol * s) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Box>) {
          for (int i = 0; i < dim_; ++i)
            if (x[i] < r.lo[i] - tol || x[i] > r.hi[i] + tol) return false;
          return true;
        } else if constexpr (std::is_same_v<T, Ball>) {
          return (x - r.center).norm() <= r.radius + tol;
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          return (r.shape.llt().solve(x - r.center)).dot(x - r.center) <= 1.0 + tol;
        } else {
          double s = r.h.normal.norm();
          return r.h.normal.dot(x) <= r.h.offset + tol * s;
        }
      },
      rep_);
}

int default_ball_facets(int d) {
  int target = 32 * d;
  int p = 1;
  while (p < target) p <<= 1;
  return p;
}

std::vector<Vec> quasi_uniform_directions(int d, int count) {
  std::vector<Vec> dirs;
  dirs.reserve(count);
  if (d == 1) {
    Vec a(1), b(1);
    a << 1.0;
    b << -1.0;
    dirs.push_back(a);
    dirs.push_back(b);
    return dirs;
  }
  if (d == 2) {
    for (int k = 0; k < count; ++k) {
      double phi = 2.0 * M_PI * k / count;
      Vec u(2);
      u << std::cos(phi), std::sin(phi);
      dirs.push_back(u);
    }
    return dirs;
  }
  if (d == 3) {
    // Fibonacci sphere.
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int k = 0; k < count; ++k) {
      double z = 1.0 - (2.0 * k + 1.0) / count;
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double phi = 2.0 * M_PI * k / golden;
      Vec u(3);
      u << r * std::cos(phi), r * std::sin(phi), z;
      dirs.push_back(u);
    }
    return dirs;
  }
  throw Error("quasi_uniform_directions: only d <= 3 supported");
}

std::vector<Halfspace> ConvexBody::to_halfspaces(int ball_facets) const {
  if (ball_facets <= 0) ball_facets = default_ball_facets(dim_);
  return std::visit(
      [&](const auto& r) -> std::vector<Halfspace> {
        using T = std::decay_t<decltype(r)>;
        std::vector<Halfspace> out;
        if constexpr (std::is_same_v<T, HPolytope>) {
          out = r.facets;
        } else if constexpr (std::is_same_v<T, Box>) {
          for (int i = 0; i < dim_; ++i) {
            out.push_back(Halfspace::axis(dim_, i, r.hi[i], true));
            out.push_back(Halfspace::axis(dim_, i, r.lo[i], false));
          }
        } else if constexpr (std::is_same_v<T, Ball>) {
          for (const Vec& u : quasi_uniform_directions(dim_, ball_facets))
            out.emplace_back(u, u.dot(r.center) + r.radius);
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          Eigen::SelfAdjointEigenSolver<Mat> es(r.shape);
          Mat b = es.operatorSqrt();
          for (const Vec& u : quasi_uniform_directions(dim_, ball_facets))
            out.emplace_back(u, u.dot(r.center) + (b * u).norm());
        } else {
          out.push_back(r.h);
        }
        return out;
      },
      rep_);
}

void Family::validate() const {
  if (bounding_radius <= 0) throw Error("bounding_radius must be positive");
  for (const auto& b : members)
    if (b.dim() != dim) throw Error("family member dimension mismatch");
}

ConvexBody intersect(const std::vector<ConvexBody>& bodies, int ball_facets) {
  if (bodies.empty()) throw Error("intersect: empty body list");
  int d = bodies.front().dim();
  std::vector<Halfspace> facets;
  for (const auto& b : bodies) {
    if (b.dim() != d) throw Error("intersect: dimension mismatch");
    auto hs = b.to_halfspaces(ball_facets);
    facets.insert(facets.end(), hs.begin(), hs.end());
  }
  return ConvexBody::polytope(d, std::move(facets));
}

ConvexBody intersect_members(const Family& f, const std::vector<int>& idx, int ball_facets) {
  std::vector<ConvexBody> bodies;
  bodies.reserve(idx.size());
  for (int i : idx) bodies.push_back(f.members.at(i));
  return intersect(bodies, ball_facets);
}

}  // namespace helly
