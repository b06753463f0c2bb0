#pragma once

#include "helly/geometry.hpp"
#include "helly/volume.hpp"

namespace helly {

// The selection pipelines run on either volume or diameter; both are
// monotone measures of clipped halfspace intersections.
enum class MeasureKind { Volume, Diameter };

double clipped_measure(MeasureKind kind, const std::vector<Halfspace>& hs, int dim,
                       double clip_radius);

// The halfspace H(t) = {x_d <= t} with minimal t such that the measure of
// K intersected with H(t) reaches target (volume 1 in the classical
// setting). Found by bisection; the measure is nondecreasing in t.
struct CoveringHalfspace {
  double t = 0.0;
  Halfspace halfspace;
  double achieved = 0.0;
};

CoveringHalfspace covering_halfspace(const std::vector<Halfspace>& body, int dim, double tol,
                                     double clip_radius = kDefaultBoundingRadius,
                                     double target = 1.0,
                                     MeasureKind kind = MeasureKind::Volume);
CoveringHalfspace covering_halfspace(const ConvexBody& body, double tol,
                                     double clip_radius = kDefaultBoundingRadius,
                                     double target = 1.0,
                                     MeasureKind kind = MeasureKind::Volume);

struct GoodTuple {
  std::vector<int> members;          // sorted, size 2d
  std::vector<int> assigned_subset;  // (2d-1)-subset with the largest covering t
  double t_value = 0.0;
  double measure = 0.0;
};

struct GoodTupleTable {
  int d = 0;
  double threshold = 1.0;
  long long total_tuples = 0;
  std::vector<GoodTuple> tuples;
};

// Measures of every k-subset intersection, indexed by the lexicographic
// rank of the subset. The parallel kernel and the serial reference share a
// fixed block decomposition and produce identical vectors.
std::vector<double> tuple_measures_serial(const Family& f, int k, MeasureKind kind);
std::vector<double> tuple_measures_parallel(const Family& f, int k, MeasureKind kind);

// All good (2d)-tuples with their assigned (2d-1)-subsets; covering
// halfspace values are memoized per distinct subset. Ties in t are broken
// by lexicographically smallest subset.
GoodTupleTable enumerate_good_tuples(const Family& f, double threshold, double tol,
                                     MeasureKind kind = MeasureKind::Volume);

struct ClaimDiagnostics {
  int case_id = 0;  // 1, 2 or 3
  std::vector<int> subset;
  double measure = 0.0;
  double t1 = 0.0, t0 = 0.0;
};

// The three case families of (2d)-subsets of {H0, K} union J0; Case 3
// additionally checks the covering-halfspace comparison t1 <= t0 + tol.
bool claim_verify(const std::vector<int>& j0, int k_index, const CoveringHalfspace& h0,
                  const Family& f, double threshold, double tol,
                  MeasureKind kind = MeasureKind::Volume, ClaimDiagnostics* diag = nullptr);

struct SelectionReport {
  int d = 0;
  MeasureKind kind = MeasureKind::Volume;
  double threshold = 1.0;
  long long good_count = 0;
  long long total_tuples = 0;
  double good_fraction = 0.0;
  std::vector<int> j0;
  double t0 = 0.0;
  Halfspace h0;
  std::vector<int> f0;
  int popularity = 0;
  double l_measure = 0.0;  // measure of L = H0 int members of J0
  bool claim_verified = false;
  std::vector<int> selected;
  double measured = 0.0;  // measure of the selected subfamily's intersection
};

// The constructive selection: good tuples -> most popular (2d-1)-subset J0
// -> covering halfspace H0 -> Claim verification on F0 -> greedy
// intersection clustering of {K int L} with slack factor (1-eps) of the
// smallest observed pairwise measure.
SelectionReport qfh2d_select(const Family& f, double threshold, double tol, double eps = 0.1,
                             MeasureKind kind = MeasureKind::Volume);

// (all 2d-subsets reach the threshold, measure of the full intersection).
std::pair<bool, double> quantitative_helly_check(const Family& f, double threshold,
                                                 MeasureKind kind = MeasureKind::Volume);

// Largest subfamily whose intersection measure reaches the threshold, by
// full subset enumeration (n <= 15); ties resolved to the
// lexicographically smallest index list.
std::vector<int> brute_force_best_subfamily(const Family& f, double threshold,
                                            MeasureKind kind = MeasureKind::Volume);

// Kalai's optimal fractional-Helly bound beta = 1 - (1-alpha)^{1/(d+1)}.
double fractional_helly_baseline(double alpha, int d);

}  // namespace helly
