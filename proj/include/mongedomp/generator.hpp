#pragma once

#include <cstdint>

#include "mongedomp/domp.hpp"
#include "mongedomp/lambda.hpp"

namespace mongedomp {

/// Cost matrix with entries uniform on [100, 1000] in two-decimal money,
/// i.e. scaled integers in {10000, ..., 100000}. The draw depends on
/// (n, seed) only, so all weight families of a seed share one matrix.
MoneyMatrix random_cost_matrix(int n, std::uint64_t seed);

/// Deterministic test-bed instance: random_cost_matrix(n, seed) plus the
/// family's weight vector (the random family draws from its own stream of
/// the same seed).
DompInstance generate_instance(int n, int p, std::uint64_t seed,
                               LambdaFamily family);

}  // namespace mongedomp
