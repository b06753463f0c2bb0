#include "helly/inscribed.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "helly/lp.hpp"
#include "helly/volume.hpp"

namespace helly {

namespace {

// Packing of (B, c) with B symmetric: diagonal first, then strict upper
// triangle row-wise, then the center.
struct EllipsoidParams {
  int d;
  int nb;  // d(d+1)/2

  explicit EllipsoidParams(int dim) : d(dim), nb(dim * (dim + 1) / 2) {}
  int size() const { return nb + d; }

  Mat unpack_b(const Vec& th) const {
    Mat b(d, d);
    int k = 0;
    for (int i = 0; i < d; ++i) b(i, i) = th[k++];
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        b(i, j) = th[k];
        b(j, i) = th[k];
        ++k;
      }
    return b;
  }
  Vec unpack_c(const Vec& th) const { return th.segment(nb, d); }
  Vec pack(const Mat& b, const Vec& c) const {
    Vec th(size());
    int k = 0;
    for (int i = 0; i < d; ++i) th[k++] = b(i, i);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) th[k++] = b(i, j);
    th.segment(nb, d) = c;
    return th;
  }
};

struct BarrierEval {
  bool feasible = false;
  double value = 0.0;
  Vec grad;
  Mat hess;
};

// Symmetric basis matrix for parameter u applied to a vector: E_u a.
Vec basis_times(const EllipsoidParams& pp, int u, const Vec& a) {
  Vec w = Vec::Zero(pp.d);
  if (u < pp.d) {
    w[u] = a[u];
    return w;
  }
  int k = pp.d;
  for (int i = 0; i < pp.d; ++i)
    for (int j = i + 1; j < pp.d; ++j) {
      if (k == u) {
        w[i] = a[j];
        w[j] = a[i];
        return w;
      }
      ++k;
    }
  throw Error("bad basis index");
}

// f_t = t * (-log det B) - sum_i log(b_i - a_i.c - ||B a_i||), with exact
// gradient and Hessian in the packed (B, c) coordinates.
BarrierEval eval_barrier(const EllipsoidParams& pp, const std::vector<Halfspace>& hs,
                         const Vec& th, double t, bool want_derivs) {
  BarrierEval out;
  const int n = pp.size();
  Mat b = pp.unpack_b(th);
  Vec c = pp.unpack_c(th);
  Eigen::LLT<Mat> llt(b);
  if (llt.info() != Eigen::Success) return out;
  double logdet = 0.0;
  for (int i = 0; i < pp.d; ++i) {
    double lii = llt.matrixL()(i, i);
    if (lii <= 0) return out;
    logdet += 2.0 * std::log(lii);
  }
  out.value = -t * logdet;
  Mat binv;
  if (want_derivs) {
    out.grad = Vec::Zero(n);
    out.hess = Mat::Zero(n, n);
    binv = llt.solve(Mat::Identity(pp.d, pp.d));
    int k = 0;
    for (int i = 0; i < pp.d; ++i) out.grad[k++] = -t * binv(i, i);
    for (int i = 0; i < pp.d; ++i)
      for (int j = i + 1; j < pp.d; ++j) out.grad[k++] = -2.0 * t * binv(i, j);
    // D^2(-log det B)[E_u, E_v] = tr(B^{-1} E_u B^{-1} E_v).
    std::vector<Mat> binv_e(pp.nb);
    for (int u = 0; u < pp.nb; ++u) {
      Mat e = Mat::Zero(pp.d, pp.d);
      if (u < pp.d) e(u, u) = 1.0;
      else {
        int k2 = pp.d;
        for (int i = 0; i < pp.d; ++i)
          for (int j = i + 1; j < pp.d; ++j) {
            if (k2 == u) {
              e(i, j) = 1.0;
              e(j, i) = 1.0;
            }
            ++k2;
          }
      }
      binv_e[u] = binv * e;
    }
    for (int u = 0; u < pp.nb; ++u)
      for (int v = u; v < pp.nb; ++v) {
        double h = t * (binv_e[u] * binv_e[v]).trace();
        out.hess(u, v) += h;
        if (u != v) out.hess(v, u) += h;
      }
  }
  for (const auto& h : hs) {
    const Vec& a = h.normal;  // unit
    Vec ba = b * a;
    double r = ba.norm();
    double slack = h.offset - a.dot(c) - r;
    if (slack <= 0) return out;
    out.value -= std::log(slack);
    if (want_derivs && r > 1e-300) {
      // grad(-s) = [Dr over the B basis; a], Dr_u = (Ba).(E_u a)/r.
      Vec gs = Vec::Zero(n);
      std::vector<Vec> w(pp.nb);
      for (int u = 0; u < pp.nb; ++u) {
        w[u] = basis_times(pp, u, a);
        gs[u] = ba.dot(w[u]) / r;
      }
      for (int i = 0; i < pp.d; ++i) gs[pp.nb + i] = a[i];
      double inv = 1.0 / slack;
      out.grad += inv * gs;
      out.hess += (inv * inv) * (gs * gs.transpose());
      // (1/s) D^2 r on the B block.
      for (int u = 0; u < pp.nb; ++u)
        for (int v = u; v < pp.nb; ++v) {
          double d2 = w[u].dot(w[v]) / r - (ba.dot(w[u]) * ba.dot(w[v])) / (r * r * r);
          out.hess(u, v) += inv * d2;
          if (u != v) out.hess(v, u) += inv * d2;
        }
    }
  }
  out.feasible = true;
  return out;
}

}  // namespace

Ball chebyshev_ball(const ConvexBody& body, double clip_radius) {
  auto hs = body.to_halfspaces();
  auto r = chebyshev_center(hs, body.dim(), clip_radius);
  if (r.radius <= kGeomTol) throw Error("chebyshev_ball: empty interior");
  return Ball{r.center, r.radius};
}

double ellipsoid_gauge(const Ellipsoid& e, const Vec& x) {
  Eigen::SelfAdjointEigenSolver<Mat> es(e.shape);
  Mat binv = es.operatorInverseSqrt();
  return (binv * (x - e.center)).norm();
}

Ellipsoid max_inscribed_ellipsoid(const ConvexBody& body, double tol, double clip_radius) {
  const int d = body.dim();
  if (d > 3) throw Error("max_inscribed_ellipsoid: requires d <= 3");
  std::vector<Halfspace> hs;
  for (const auto& h : body.to_halfspaces()) hs.push_back(h.normalized());

  {
    auto ve = enumerate_vertices(hs, d, clip_radius);
    if (ve.vertices.empty()) throw Error("max_inscribed_ellipsoid: empty body");
    if (ve.clip_active) throw Error("max_inscribed_ellipsoid: unbounded body");
  }
  auto cheb = chebyshev_center(hs, d, clip_radius);
  if (cheb.radius <= kGeomTol) throw Error("max_inscribed_ellipsoid: empty interior");

  EllipsoidParams pp(d);
  Vec th = pp.pack(Mat::Identity(d, d) * (0.9 * cheb.radius), cheb.center);
  const int m = static_cast<int>(hs.size());
  const double t_final = std::max(1e8, m / std::max(tol, 1e-12));
  int total_iters = 0;

  for (double t = 1.0; t <= t_final * 8; t *= 8) {
    for (int iter = 0; iter < 80; ++iter) {
      if (++total_iters > 4000)
        throw Error("max_inscribed_ellipsoid: iteration cap exceeded without convergence");
      BarrierEval e0 = eval_barrier(pp, hs, th, t, true);
      if (!e0.feasible) throw Error("max_inscribed_ellipsoid: lost feasibility");
      const int n = pp.size();
      Mat hess = e0.hess;
      double hscale = 1.0 + hess.diagonal().cwiseAbs().maxCoeff();
      Vec step = Vec::Zero(n);
      double decrement = 0.0;
      bool have_step = false;
      for (double reg = 0.0; reg <= 1e-2; reg = (reg == 0.0 ? 1e-14 : reg * 1000)) {
        Eigen::LDLT<Mat> ldlt(Mat(hess + reg * hscale * Mat::Identity(n, n)));
        if (ldlt.info() != Eigen::Success) continue;
        step = ldlt.solve(-e0.grad);
        decrement = -e0.grad.dot(step);
        if (std::isfinite(decrement) && decrement >= -1e-9 * hscale) {
          have_step = true;
          break;
        }
      }
      if (!have_step) throw Error("max_inscribed_ellipsoid: singular hessian");
      if (decrement < 1e-18 * std::max(1.0, t)) break;
      // Backtracking line search keeping strict feasibility.
      double alpha = 1.0;
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls) {
        BarrierEval et = eval_barrier(pp, hs, th + alpha * step, t, false);
        if (et.feasible && et.value <= e0.value - 0.25 * alpha * decrement) {
          th += alpha * step;
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) break;
    }
    if (t >= t_final) break;
  }

  Mat b = pp.unpack_b(th);
  Vec c = pp.unpack_c(th);
  return Ellipsoid{c, b * b};
}

}  // namespace helly
