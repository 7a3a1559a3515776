#pragma once

#include <cstdint>
#include <vector>

#include "mongedomp/matrix.hpp"
#include "mongedomp/money.hpp"
#include "mongedomp/tp.hpp"

namespace mongedomp {

/// Discrete ordered median instance: n sites that double as clients, p
/// facilities to open, allocation cost c(i, j) for serving client i from
/// site j, and rank weights lambda applied to the sorted allocation costs.
/// The toolkit requires non-increasing weights (that is what makes the
/// subproblem Monge) and strictly positive costs (so the zero rung of the
/// cost ladder stays artificial).
/// Largest accepted |lambda| entry; keeps every weighted sum the toolkit
/// forms inside int64 before the checked money arithmetic takes over.
inline constexpr std::int64_t kLambdaCap = 1000000000;

struct DompInstance {
  int n;
  int p;
  MoneyMatrix cost;
  std::vector<std::int64_t> lambda;

  DompInstance(int n, int p, MoneyMatrix cost,
               std::vector<std::int64_t> lambda);
};

/// The distinct allocation costs arranged as 0 = t_0 < t_1 < ... < t_g.
/// Every matrix entry sits on exactly one rung h >= 1; rung 0 is an
/// artificial zero level that never receives demand but keeps the
/// subproblem shapes uniform.
class CostLadder {
 public:
  explicit CostLadder(const MoneyMatrix& cost);

  int g() const { return static_cast<int>(values_.size()) - 1; }
  Money value(int h) const { return values_.at(h); }
  const std::vector<Money>& values() const { return values_; }

  /// Rung index of a cost value; throws if the value is not on the ladder.
  int rank(Money c) const;

 private:
  std::vector<Money> values_;
};

/// Allocation of every client to its cheapest open site (smallest site
/// index on ties).
struct Assignment {
  std::vector<int> facility;
  std::vector<Money> cost;
};

Assignment closest_assignment(const DompInstance& inst,
                              const std::vector<int>& open);

/// Allocation costs of closest_assignment, sorted non-decreasingly.
std::vector<Money> sorted_alloc_costs(const DompInstance& inst,
                                      const std::vector<int>& open);

/// The objective <lambda, sorted allocation costs> for a given open set.
Money ordered_median_value(const DompInstance& inst,
                           const std::vector<int>& open);

/// Rung histogram of the closest assignment: entry h counts the clients
/// whose allocation cost is ladder value t_h. Length g+1, sums to n, and
/// entry 0 is always zero for strictly positive costs.
std::vector<std::int64_t> xbar_histogram(const DompInstance& inst,
                                         const CostLadder& ladder,
                                         const std::vector<int>& open);

/// The transportation subproblem induced by a rung histogram: n rows
/// (sorted positions, unit supply), g+1 columns (rungs, demand xbar), cost
/// lambda_l * t_h. Monge for non-increasing lambda; its optimal value at
/// the histogram of an open set equals the ordered median value of that
/// set.
TpInstance subproblem_tp(const DompInstance& inst, const CostLadder& ladder,
                         const std::vector<std::int64_t>& xbar);

/// Instance-wide lower bound on the objective: pair non-negative weights
/// with the sorted per-client row minima and negative weights with the
/// sorted row maxima.
Money theta_lower_bound(const DompInstance& inst);

}  // namespace mongedomp
