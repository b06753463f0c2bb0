#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace helly {

// Absolute tolerance for geometric predicates (point-on-plane, vertex
// dedup, feasibility margins). All acceptance tolerances are >= 1e-6, so
// float64 with this slack is sufficient everywhere; no exact arithmetic.
inline constexpr double kGeomTol = 1e-9;

// Default clipping radius for unbounded members of a family.
inline constexpr double kDefaultBoundingRadius = 1e6;

// Error with an optional pipeline stage tag, so multi-stage drivers can
// report which stage failed.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string message, std::string stage = {})
      : std::runtime_error(stage.empty() ? message : "[" + stage + "] " + message),
        stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Number of worker threads used by the OpenMP kernels. Respects the
// HELLY_LAB_THREADS environment variable as an upper cap.
int worker_threads();

// Deterministic per-shard seed derivation (splitmix64 step).
inline std::uint64_t shard_seed(std::uint64_t base, std::uint64_t shard) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (shard + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// n choose k as a long long; throws on overflow past ~9e18.
long long binomial(int n, int k);

// Lexicographic combination enumeration: calls fn(const std::vector<int>&)
// for every k-subset of {0,..,n-1} in increasing lexicographic order.
template <class Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(const_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// rank -> k-subset in lexicographic order; inverse of the enumeration
// order above. Used to split combination scans into disjoint blocks.
std::vector<int> unrank_combination(long long rank, int n, int k);

}  // namespace helly
