#include "mongedomp/tp.hpp"

#include <numeric>
#include <stdexcept>

namespace mongedomp {

TpInstance::TpInstance(std::vector<std::int64_t> s, std::vector<std::int64_t> d, MoneyMatrix c)
    : p(static_cast<int>(s.size())),
      q(static_cast<int>(d.size())),
      supply(std::move(s)),
      demand(std::move(d)),
      cost(std::move(c)) {
  if (p < 1 || q < 1) throw std::invalid_argument("transportation instance needs p,q >= 1");
  if (cost.rows() != p || cost.cols() != q)
    throw std::invalid_argument("cost matrix shape does not match supplies/demands");
  for (auto v : supply)
    if (v < 0) throw std::invalid_argument("negative supply");
  for (auto v : demand)
    if (v < 0) throw std::invalid_argument("negative demand");
}

std::int64_t TpInstance::total_supply() const {
  return std::accumulate(supply.begin(), supply.end(), std::int64_t{0});
}

std::int64_t TpInstance::total_demand() const {
  return std::accumulate(demand.begin(), demand.end(), std::int64_t{0});
}

bool balanced_check(const TpInstance& inst) {
  return inst.total_supply() == inst.total_demand();
}

bool is_monge(const MoneyMatrix& c) {
  if (c.empty()) throw std::invalid_argument("is_monge: empty matrix");
  for (int i = 0; i + 1 < c.rows(); ++i)
    for (int j = 0; j + 1 < c.cols(); ++j)
      if (c(i, j) + c(i + 1, j + 1) > c(i, j + 1) + c(i + 1, j)) return false;
  return true;
}

Money StaircasePath::objective(const TpInstance& inst) const {
  Money total{0};
  for (std::size_t t = 0; t < cells.size(); ++t)
    total += shipments[t] * inst.cost(cells[t].row, cells[t].col);
  return total;
}

Money DualSolution::objective(const TpInstance& inst) const {
  Money total{0};
  for (int i = 0; i < inst.p; ++i) total += inst.supply[i] * u[i];
  for (int j = 0; j < inst.q; ++j) total += inst.demand[j] * v[j];
  return total;
}

bool DualSolution::feasible_for(const TpInstance& inst) const {
  for (int i = 0; i < inst.p; ++i)
    for (int j = 0; j < inst.q; ++j)
      if (u[i] + v[j] > inst.cost(i, j)) return false;
  return true;
}

}  // namespace mongedomp
