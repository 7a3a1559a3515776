#pragma once

#include <cstdint>
#include <vector>

#include "mongedomp/matrix.hpp"
#include "mongedomp/money.hpp"

namespace mongedomp {

/// A balanced-capable transportation problem: p supply rows, q demand
/// columns, integer supplies/demands and an exact cost matrix. Cost entries
/// may be negative; nonnegativity is a concern of the location layer only.
struct TpInstance {
  int p = 0;
  int q = 0;
  std::vector<std::int64_t> supply;
  std::vector<std::int64_t> demand;
  MoneyMatrix cost;

  TpInstance() = default;
  /// Validates dimensions and nonnegativity of supplies/demands.
  /// Balance is not enforced here; solver entry points check it.
  TpInstance(std::vector<std::int64_t> s, std::vector<std::int64_t> d, MoneyMatrix c);

  std::int64_t total_supply() const;
  std::int64_t total_demand() const;
};

/// True iff total supply equals total demand.
bool balanced_check(const TpInstance& inst);

/// Adjacent 2x2 Monge check: c(i,j) + c(i+1,j+1) <= c(i,j+1) + c(i+1,j) for
/// every adjacent pair. Equivalent to the full quadruple definition.
bool is_monge(const MoneyMatrix& c);

enum class Move { kDown, kRight };

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(Cell, Cell) = default;
};

/// The monotone lattice path traced by the greedy rule, from (0,0) to
/// (p-1,q-1), with one shipment amount per visited cell (zero shipments on
/// the path are kept).
struct StaircasePath {
  std::vector<Cell> cells;
  std::vector<Move> moves;  // size cells.size() - 1
  std::vector<std::int64_t> shipments;

  /// Primal objective: sum of shipment * cost over path cells.
  Money objective(const TpInstance& inst) const;
};

/// Row duals u (size p) and column duals v (size q).
struct DualSolution {
  std::vector<Money> u;
  std::vector<Money> v;

  /// Dual objective: sum s_i u_i + sum d_j v_j.
  Money objective(const TpInstance& inst) const;
  /// u_i + v_j <= c_ij for every pair.
  bool feasible_for(const TpInstance& inst) const;
};

}  // namespace mongedomp
