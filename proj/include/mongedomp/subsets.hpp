#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mongedomp {

/// Which scan kernel to run. The parallel kernel needs _OPENMP; without it
/// the request silently degrades to the serial reference.
enum class Exec { kSerial, kParallel };

/// Largest n the brute-force DOMP oracle accepts before refusing to
/// enumerate, read from the MONGE_DOMP_ENUM_CAP environment variable.
/// Unset, unparsable, or out-of-range values fall back to 16.
inline int subset_enum_cap() {
  const char* raw = std::getenv("MONGE_DOMP_ENUM_CAP");
  if (raw == nullptr || *raw == '\0') return 16;
  char* end = nullptr;
  const long parsed = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed <= 0 || parsed > 64) return 16;
  return static_cast<int>(parsed);
}

/// Exact binomial coefficient; throws std::overflow_error if the value does
/// not fit in 64 bits.
inline std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t prod = 0;
    if (__builtin_mul_overflow(out, static_cast<std::uint64_t>(n - k + i),
                               &prod)) {
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    out = prod / static_cast<std::uint64_t>(i);  // exact: prod = i * C(n-k+i, i)
  }
  return out;
}

/// Calls visit(subset) for every k-subset of {0, ..., n-1}, in lexicographic
/// order of the sorted index lists: {0,1}, {0,2}, ..., {n-2,n-1}.
template <typename Visit>
void enumerate_p_subsets(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) throw std::invalid_argument("subset size out of range");
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

/// Materialized enumerate_p_subsets, same order.
inline std::vector<std::vector<int>> all_p_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  out.reserve(binomial(n, k));
  enumerate_p_subsets(n, k, [&](const std::vector<int>& s) { out.push_back(s); });
  return out;
}

/// Minimum of eval(i) over i in [0, count), together with the smallest index
/// attaining it. eval must be pure and thread-safe when exec is kParallel;
/// both kernels return identical results, which the tests rely on.
template <typename Value, typename Eval>
std::pair<Value, std::size_t> min_scan(std::size_t count, Eval&& eval,
                                       Exec exec) {
  if (count == 0) throw std::invalid_argument("min_scan over an empty range");
  Value best = eval(std::size_t{0});
  std::size_t best_at = 0;
#ifdef _OPENMP
  if (exec == Exec::kParallel) {
#pragma omp parallel
    {
      Value local = best;
      std::size_t local_at = 0;
#pragma omp for nowait
      for (long long i = 1; i < static_cast<long long>(count); ++i) {
        const Value val = eval(static_cast<std::size_t>(i));
        if (val < local) {
          local = val;
          local_at = static_cast<std::size_t>(i);
        }
      }
#pragma omp critical
      {
        if (local < best || (local == best && local_at < best_at)) {
          best = local;
          best_at = local_at;
        }
      }
    }
    return {best, best_at};
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 1; i < count; ++i) {
    const Value val = eval(i);
    if (val < best) {
      best = val;
      best_at = i;
    }
  }
  return {best, best_at};
}

}  // namespace mongedomp
