#include "helly/lp.hpp"

#include <algorithm>
#include <cmath>

namespace helly {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-9;

// Standard-form tableau: minimize c.x, A x = b, x >= 0, b >= 0, kept in
// canonical form (basis columns are unit vectors).
struct Tableau {
  Mat a;                   // m x n
  Vec b;                   // m
  std::vector<int> basis;  // m basic column indices
  int iterations = 0;

  // Bland simplex on the given cost vector; entering variables restricted
  // to columns < col_limit. Returns false when unbounded.
  bool run(const Vec& cost, int col_limit) {
    const int m = static_cast<int>(a.rows());
    while (true) {
      // Reduced costs from the canonical tableau.
      Vec reduced = cost;
      for (int r = 0; r < m; ++r) {
        double cb = cost[basis[r]];
        if (cb != 0.0) reduced -= cb * a.row(r).transpose();
      }
      int enter = -1;
      for (int j = 0; j < col_limit; ++j)
        if (reduced[j] < -kPivotTol) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0.0;
      for (int r = 0; r < m; ++r) {
        double arj = a(r, enter);
        if (arj <= kPivotTol) continue;
        double ratio = b[r] / arj;
        bool take = false;
        if (leave < 0 || ratio < best - kPivotTol) take = true;
        else if (ratio < best + kPivotTol && basis[r] < basis[leave]) take = true;
        if (take) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      if (++iterations > 100000) throw Error("simplex iteration cap exceeded");
    }
  }

  void pivot(int r, int j) {
    const int m = static_cast<int>(a.rows());
    double p = a(r, j);
    a.row(r) /= p;
    b[r] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      double f = a(i, j);
      if (f != 0.0) {
        a.row(i) -= f * a.row(r);
        b[i] -= f * b[r];
      }
    }
    basis[r] = j;
  }

  double objective(const Vec& cost) const {
    double obj = 0.0;
    for (int r = 0; r < static_cast<int>(a.rows()); ++r) obj += cost[basis[r]] * b[r];
    return obj;
  }

  void drop_row(int r) {
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    Mat a2(m - 1, n);
    Vec b2(m - 1);
    std::vector<int> basis2;
    basis2.reserve(m - 1);
    int k = 0;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      a2.row(k) = a.row(i);
      b2[k] = b[i];
      basis2.push_back(basis[i]);
      ++k;
    }
    a = std::move(a2);
    b = std::move(b2);
    basis = std::move(basis2);
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  const int n0 = p.num_vars;
  const int m = static_cast<int>(p.rows.size());
  if (static_cast<int>(p.objective.size()) != n0)
    throw Error("lp: objective size mismatch");

  // Map to standard form. Free variables are split x = x+ - x-.
  std::vector<int> pos_col(n0), neg_col(n0, -1);
  int n = 0;
  for (int j = 0; j < n0; ++j) {
    pos_col[j] = n++;
    if (!p.free_vars.empty() && p.free_vars[j]) neg_col[j] = n++;
  }
  const int slack_base = n;
  int num_slack = 0;
  for (const auto& row : p.rows)
    if (row.rel != '=') ++num_slack;
  n += num_slack;
  const int art_base = n;
  n += m;

  Tableau t;
  t.a = Mat::Zero(m, n);
  t.b = Vec::Zero(m);
  t.basis.resize(m);
  int slack = slack_base;
  for (int i = 0; i < m; ++i) {
    const auto& row = p.rows[i];
    if (static_cast<int>(row.a.size()) != n0) throw Error("lp: row size mismatch");
    double sign = 1.0;
    double rhs = row.rhs;
    char rel = row.rel;
    if (rhs < 0) {  // make rhs nonnegative; flips inequalities
      sign = -1.0;
      rhs = -rhs;
      if (rel == '<') rel = '>';
      else if (rel == '>') rel = '<';
    }
    for (int j = 0; j < n0; ++j) {
      double v = sign * row.a[j];
      t.a(i, pos_col[j]) = v;
      if (neg_col[j] >= 0) t.a(i, neg_col[j]) = -v;
    }
    t.b[i] = rhs;
    if (rel == '<') t.a(i, slack++) = 1.0;
    else if (rel == '>') t.a(i, slack++) = -1.0;
    t.a(i, art_base + i) = 1.0;
    t.basis[i] = art_base + i;
  }

  LpSolution sol;

  // Phase 1: minimize the sum of artificials.
  Vec phase1 = Vec::Zero(n);
  for (int i = 0; i < m; ++i) phase1[art_base + i] = 1.0;
  if (!t.run(phase1, n)) throw Error("lp: phase 1 unbounded");
  if (t.objective(phase1) > 1e-7) {
    sol.status = LpStatus::Infeasible;
    sol.iterations = t.iterations;
    return sol;
  }
  // Drive artificials out of the basis; drop rows that stay artificial
  // (those constraints are redundant).
  for (int r = static_cast<int>(t.a.rows()) - 1; r >= 0; --r) {
    if (t.basis[r] < art_base) continue;
    int enter = -1;
    for (int j = 0; j < art_base; ++j)
      if (std::abs(t.a(r, j)) > 1e-8) {
        enter = j;
        break;
      }
    if (enter >= 0) t.pivot(r, enter);
    else t.drop_row(r);
  }

  // Phase 2: artificial columns may never re-enter.
  Vec cost = Vec::Zero(n);
  for (int j = 0; j < n0; ++j) {
    cost[pos_col[j]] = p.objective[j];
    if (neg_col[j] >= 0) cost[neg_col[j]] = -p.objective[j];
  }
  if (!t.run(cost, art_base)) {
    sol.status = LpStatus::Unbounded;
    sol.iterations = t.iterations;
    return sol;
  }
  sol.iterations = t.iterations;

  Vec xs = Vec::Zero(n);
  for (int r = 0; r < static_cast<int>(t.a.rows()); ++r) xs[t.basis[r]] = t.b[r];
  sol.x = Vec::Zero(n0);
  for (int j = 0; j < n0; ++j) {
    sol.x[j] = xs[pos_col[j]];
    if (neg_col[j] >= 0) sol.x[j] -= xs[neg_col[j]];
  }
  sol.objective = p.objective.dot(sol.x);
  sol.status = LpStatus::Optimal;
  return sol;
}

bool halfspaces_feasible(const std::vector<Halfspace>& hs, int dim) {
  LpProblem p;
  p.num_vars = dim;
  p.objective = Vec::Zero(dim);
  p.free_vars.assign(dim, true);
  for (const auto& h : hs) {
    Halfspace u = h.normalized();
    p.add_row(u.normal, '<', u.offset + kFeasTol);
  }
  return solve_lp(p).status == LpStatus::Optimal;
}

ChebyshevResult chebyshev_center(const std::vector<Halfspace>& hs, int dim, double clip) {
  // Variables: center (free) then radius (nonnegative).
  LpProblem p;
  p.num_vars = dim + 1;
  p.objective = Vec::Zero(dim + 1);
  p.objective[dim] = -1.0;  // maximize r
  p.free_vars.assign(dim + 1, true);
  p.free_vars[dim] = false;
  for (const auto& h : hs) {
    Halfspace u = h.normalized();
    Vec a(dim + 1);
    a.head(dim) = u.normal;
    a[dim] = 1.0;
    p.add_row(a, '<', u.offset);
  }
  for (int i = 0; i < dim; ++i) {
    Vec a = Vec::Zero(dim + 1);
    a[i] = 1.0;
    p.add_row(a, '<', clip);
    a[i] = -1.0;
    p.add_row(a, '<', clip);
  }
  {
    Vec a = Vec::Zero(dim + 1);
    a[dim] = 1.0;
    p.add_row(a, '<', clip);
  }
  auto sol = solve_lp(p);
  ChebyshevResult out;
  if (sol.status != LpStatus::Optimal) return out;
  out.center = sol.x.head(dim);
  out.radius = sol.x[dim];
  return out;
}

}  // namespace helly
