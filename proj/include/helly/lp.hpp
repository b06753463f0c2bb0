#pragma once

#include "helly/geometry.hpp"

namespace helly {

// Dense linear programs, minimization form:
//   minimize c.x   subject to   a_i.x (<=|=|>=) b_i,
// with x_j >= 0 unless marked free. Solved by a self-contained two-phase
// primal simplex with Bland's rule; pivots are deterministic, so repeated
// solves of the same instance are bit-identical.
struct LpRow {
  Vec a;
  double rhs = 0.0;
  char rel = '<';  // '<', '=', '>'
};

struct LpProblem {
  int num_vars = 0;
  Vec objective;
  std::vector<LpRow> rows;
  std::vector<bool> free_vars;  // empty means all nonnegative

  LpRow& add_row(const Vec& a, char rel, double rhs) {
    rows.push_back({a, rhs, rel});
    return rows.back();
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  Vec x;
  int iterations = 0;
};

LpSolution solve_lp(const LpProblem& p);

// Feasibility of {x : normal_i.x <= offset_i} within an absolute margin;
// normals are rescaled to unit length internally.
bool halfspaces_feasible(const std::vector<Halfspace>& hs, int dim);

// Largest inscribed ball of an HPolytope-like halfspace list, by the LP
//   max r  s.t.  a_i.c + r ||a_i|| <= b_i,  |c_j| <= clip, r <= clip.
// Returns radius < 0 when infeasible.
struct ChebyshevResult {
  Vec center;
  double radius = -1.0;
};
ChebyshevResult chebyshev_center(const std::vector<Halfspace>& hs, int dim, double clip);

}  // namespace helly
