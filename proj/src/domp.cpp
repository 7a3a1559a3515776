#include "mongedomp/domp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mongedomp {

namespace {

// Validates an open set against the instance and returns it sorted.
std::vector<int> checked_open_set(const DompInstance& inst,
                                  std::vector<int> open) {
  if (static_cast<int>(open.size()) != inst.p) {
    throw std::invalid_argument("open set must contain exactly p sites");
  }
  std::sort(open.begin(), open.end());
  for (std::size_t k = 0; k < open.size(); ++k) {
    if (open[k] < 0 || open[k] >= inst.n) {
      throw std::invalid_argument("open site index out of range");
    }
    if (k > 0 && open[k] == open[k - 1]) {
      throw std::invalid_argument("open set contains a duplicate site");
    }
  }
  return open;
}

}  // namespace

DompInstance::DompInstance(int n_in, int p_in, MoneyMatrix cost_in,
                           std::vector<std::int64_t> lambda_in)
    : n(n_in), p(p_in), cost(std::move(cost_in)), lambda(std::move(lambda_in)) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (p < 1 || p > n) throw std::invalid_argument("p must lie in [1, n]");
  if (cost.rows() != n || cost.cols() != n) {
    throw std::invalid_argument("cost matrix must be n x n");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (cost(i, j) <= Money{0}) {
        throw std::invalid_argument("allocation costs must be positive");
      }
    }
  }
  if (static_cast<int>(lambda.size()) != n) {
    throw std::invalid_argument("lambda must have n entries");
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (lambda[i] < lambda[i + 1]) {
      throw std::invalid_argument("lambda must be non-increasing");
    }
  }
  for (const std::int64_t l : lambda) {
    if (l < -kLambdaCap || l > kLambdaCap) {
      throw std::invalid_argument("lambda entries must fit in +/- 10^9");
    }
  }
}

CostLadder::CostLadder(const MoneyMatrix& cost) {
  values_.reserve(cost.rows() * cost.cols() + 1);
  values_.push_back(Money{0});
  for (int i = 0; i < cost.rows(); ++i) {
    for (int j = 0; j < cost.cols(); ++j) values_.push_back(cost(i, j));
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (values_.size() < 2 || values_[0] != Money{0} || values_[1] <= Money{0}) {
    throw std::invalid_argument("cost values must be strictly positive");
  }
}

int CostLadder::rank(Money c) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), c);
  if (it == values_.end() || *it != c) {
    throw std::invalid_argument("cost value is not on the ladder");
  }
  return static_cast<int>(it - values_.begin());
}

Assignment closest_assignment(const DompInstance& inst,
                              const std::vector<int>& open) {
  const auto sites = checked_open_set(inst, open);
  Assignment out;
  out.facility.resize(inst.n);
  out.cost.reserve(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    int best = sites[0];
    for (const int j : sites) {
      if (inst.cost(i, j) < inst.cost(i, best)) best = j;
    }
    out.facility[i] = best;
    out.cost.push_back(inst.cost(i, best));
  }
  return out;
}

std::vector<Money> sorted_alloc_costs(const DompInstance& inst,
                                      const std::vector<int>& open) {
  auto costs = closest_assignment(inst, open).cost;
  std::sort(costs.begin(), costs.end());
  return costs;
}

Money ordered_median_value(const DompInstance& inst,
                           const std::vector<int>& open) {
  const auto sorted = sorted_alloc_costs(inst, open);
  Money total{0};
  for (int l = 0; l < inst.n; ++l) total += sorted[l] * inst.lambda[l];
  return total;
}

std::vector<std::int64_t> xbar_histogram(const DompInstance& inst,
                                         const CostLadder& ladder,
                                         const std::vector<int>& open) {
  std::vector<std::int64_t> xbar(ladder.g() + 1, 0);
  for (const Money c : closest_assignment(inst, open).cost) {
    ++xbar[ladder.rank(c)];
  }
  return xbar;
}

TpInstance subproblem_tp(const DompInstance& inst, const CostLadder& ladder,
                         const std::vector<std::int64_t>& xbar) {
  if (static_cast<int>(xbar.size()) != ladder.g() + 1) {
    throw std::invalid_argument("histogram must have g+1 entries");
  }
  const int q = ladder.g() + 1;
  std::vector<Money> cells;
  cells.reserve(static_cast<std::size_t>(inst.n) * q);
  for (int l = 0; l < inst.n; ++l) {
    for (int h = 0; h < q; ++h) cells.push_back(ladder.value(h) * inst.lambda[l]);
  }
  return TpInstance(std::vector<std::int64_t>(inst.n, 1), xbar,
                    MoneyMatrix(inst.n, q, std::move(cells)));
}

Money theta_lower_bound(const DompInstance& inst) {
  std::vector<Money> row_min;
  std::vector<Money> row_max;
  row_min.reserve(inst.n);
  row_max.reserve(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    Money lo = inst.cost(i, 0);
    Money hi = inst.cost(i, 0);
    for (int j = 1; j < inst.n; ++j) {
      lo = std::min(lo, inst.cost(i, j));
      hi = std::max(hi, inst.cost(i, j));
    }
    row_min.push_back(lo);
    row_max.push_back(hi);
  }
  std::sort(row_min.begin(), row_min.end());
  std::sort(row_max.begin(), row_max.end());
  Money bound{0};
  for (int i = 0; i < inst.n; ++i) {
    bound += (inst.lambda[i] >= 0 ? row_min[i] : row_max[i]) * inst.lambda[i];
  }
  return bound;
}

}  // namespace mongedomp
