#include "mongedomp/generator.hpp"

#include <stdexcept>
#include <vector>

#include "mongedomp/rng.hpp"

namespace mongedomp {

namespace {

constexpr std::uint64_t kCostStream = 1;
constexpr std::uint64_t kLambdaStream = 2;

constexpr std::int64_t kCostLow = 10000;    // 100.00
constexpr std::int64_t kCostHigh = 100000;  // 1000.00

}  // namespace

MoneyMatrix random_cost_matrix(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  SplitMix64 rng(mix_stream(seed, static_cast<std::uint64_t>(n), kCostStream));
  std::vector<Money> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  const std::uint64_t span = kCostHigh - kCostLow + 1;
  for (int i = 0; i < n * n; ++i) {
    cells.push_back(
        Money{kCostLow + static_cast<std::int64_t>(rng.next_below(span))});
  }
  return MoneyMatrix(n, n, std::move(cells));
}

DompInstance generate_instance(int n, int p, std::uint64_t seed,
                               LambdaFamily family) {
  SplitMix64 lambda_rng(
      mix_stream(seed, static_cast<std::uint64_t>(n), kLambdaStream));
  return DompInstance(n, p, random_cost_matrix(n, seed),
                      lambda_vector(family, n, lambda_rng));
}

}  // namespace mongedomp
