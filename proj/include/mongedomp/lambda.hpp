#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mongedomp/rng.hpp"

namespace mongedomp {

/// The nine rank-weight families of the test bed, all non-increasing.
/// With k = floor(n/2):
///   kMedian      (-1, ..., -1)
///   kCenter      (0, ..., 0, -1)
///   kKCentrum    (0, ..., 0, -1 x k)
///   kKMin        (1 x k, 0, ..., 0)
///   kKRange      (1 x k, -1 x (n-k))
///   kRange       (1, 0, ..., 0, -1)
///   kReverse     (n, n-1, ..., 1)
///   kNegReverse  (-1, -2, ..., -n)
///   kRandom      n draws from [-n, n], sorted non-increasingly
enum class LambdaFamily {
  kMedian,
  kCenter,
  kKCentrum,
  kKMin,
  kKRange,
  kRange,
  kReverse,
  kNegReverse,
  kRandom,
};

/// The families in the order above.
const std::vector<LambdaFamily>& all_families();

/// Tag used in CLI flags, file metadata, and instance ids: "median",
/// "center", "kcentrum", "kmin", "krange", "range", "reverse",
/// "negreverse", "random".
std::string family_tag(LambdaFamily family);

/// Inverse of family_tag; throws std::invalid_argument on unknown tags.
LambdaFamily family_from_tag(std::string_view tag);

/// Weight vector of a family. kRandom consumes draws from rng; the other
/// families ignore it.
std::vector<std::int64_t> lambda_vector(LambdaFamily family, int n,
                                        SplitMix64& rng);

/// Same, for the deterministic families; throws on kRandom.
std::vector<std::int64_t> lambda_vector(LambdaFamily family, int n);

}  // namespace mongedomp
