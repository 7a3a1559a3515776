#include "mongedomp/lambda.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mongedomp {

const std::vector<LambdaFamily>& all_families() {
  static const std::vector<LambdaFamily> families = {
      LambdaFamily::kMedian,  LambdaFamily::kCenter, LambdaFamily::kKCentrum,
      LambdaFamily::kKMin,    LambdaFamily::kKRange, LambdaFamily::kRange,
      LambdaFamily::kReverse, LambdaFamily::kNegReverse,
      LambdaFamily::kRandom,
  };
  return families;
}

std::string family_tag(LambdaFamily family) {
  switch (family) {
    case LambdaFamily::kMedian: return "median";
    case LambdaFamily::kCenter: return "center";
    case LambdaFamily::kKCentrum: return "kcentrum";
    case LambdaFamily::kKMin: return "kmin";
    case LambdaFamily::kKRange: return "krange";
    case LambdaFamily::kRange: return "range";
    case LambdaFamily::kReverse: return "reverse";
    case LambdaFamily::kNegReverse: return "negreverse";
    case LambdaFamily::kRandom: return "random";
  }
  throw std::invalid_argument("unknown lambda family");
}

LambdaFamily family_from_tag(std::string_view tag) {
  for (const LambdaFamily family : all_families()) {
    if (family_tag(family) == tag) return family;
  }
  throw std::invalid_argument("unknown lambda family tag: " + std::string(tag));
}

std::vector<std::int64_t> lambda_vector(LambdaFamily family, int n,
                                        SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int k = n / 2;
  std::vector<std::int64_t> lam(n, 0);
  switch (family) {
    case LambdaFamily::kMedian:
      lam.assign(n, -1);
      break;
    case LambdaFamily::kCenter:
      lam[n - 1] = -1;
      break;
    case LambdaFamily::kKCentrum:
      std::fill(lam.end() - k, lam.end(), -1);
      break;
    case LambdaFamily::kKMin:
      std::fill(lam.begin(), lam.begin() + k, 1);
      break;
    case LambdaFamily::kKRange:
      std::fill(lam.begin(), lam.begin() + k, 1);
      std::fill(lam.begin() + k, lam.end(), -1);
      break;
    case LambdaFamily::kRange:
      if (n < 2) throw std::invalid_argument("range weights need n >= 2");
      lam[0] = 1;
      lam[n - 1] = -1;
      break;
    case LambdaFamily::kReverse:
      for (int i = 0; i < n; ++i) lam[i] = n - i;
      break;
    case LambdaFamily::kNegReverse:
      for (int i = 0; i < n; ++i) lam[i] = -(i + 1);
      break;
    case LambdaFamily::kRandom:
      for (int i = 0; i < n; ++i) {
        lam[i] = static_cast<std::int64_t>(rng.next_below(2 * n + 1)) - n;
      }
      std::sort(lam.begin(), lam.end(), std::greater<>());
      break;
  }
  return lam;
}

std::vector<std::int64_t> lambda_vector(LambdaFamily family, int n) {
  if (family == LambdaFamily::kRandom) {
    throw std::invalid_argument("random weights need a generator");
  }
  SplitMix64 unused(0);
  return lambda_vector(family, n, unused);
}

}  // namespace mongedomp
