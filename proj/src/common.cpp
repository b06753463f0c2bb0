#include "helly/common.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace helly {

int worker_threads() {
  int n = 1;
#ifdef _OPENMP
  n = omp_get_max_threads();
#endif
  if (const char* cap = std::getenv("HELLY_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(cap, &end, 10);
    if (end != cap && v >= 1) n = std::min<long>(n, v);
  }
  return std::max(1, n);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > 9000000000000000000LL / (n - k + i))
      throw Error("binomial overflow: C(" + std::to_string(n) + "," + std::to_string(k) + ")");
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<int> unrank_combination(long long rank, int n, int k) {
  std::vector<int> out;
  out.reserve(k);
  int v = 0;
  for (int slot = 0; slot < k; ++slot) {
    while (true) {
      long long below = binomial(n - v - 1, k - slot - 1);
      if (rank < below) break;
      rank -= below;
      ++v;
    }
    out.push_back(v++);
  }
  return out;
}

}  // namespace helly
