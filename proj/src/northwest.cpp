#include "mongedomp/northwest.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace mongedomp {

namespace {

// out[m] = sum of the first m entries, so out.front() == 0 and
// out.back() == total.
std::vector<std::int64_t> prefix(const std::vector<std::int64_t>& x) {
  std::vector<std::int64_t> out(x.size() + 1, 0);
  std::partial_sum(x.begin(), x.end(), out.begin() + 1);
  return out;
}

void require_balanced(const TpInstance& inst) {
  if (!balanced_check(inst)) {
    throw std::invalid_argument("total supply differs from total demand");
  }
}

void require_path_shape(const TpInstance& inst, const StaircasePath& path) {
  const std::size_t want = static_cast<std::size_t>(inst.p + inst.q - 1);
  if (path.cells.size() != want || path.moves.size() + 1 != want ||
      path.shipments.size() != want) {
    throw std::invalid_argument("path does not fit the instance");
  }
}

}  // namespace

StaircasePath northwest_corner(const TpInstance& inst) {
  require_balanced(inst);
  const int p = inst.p;
  const int q = inst.q;
  std::vector<std::int64_t> s = inst.supply;
  std::vector<std::int64_t> d = inst.demand;

  StaircasePath path;
  path.cells.reserve(p + q - 1);
  path.shipments.reserve(p + q - 1);
  path.moves.reserve(p + q - 2);

  int i = 0;
  int j = 0;
  while (true) {
    const std::int64_t x = std::min(s[i], d[j]);
    path.cells.push_back({i, j});
    path.shipments.push_back(x);
    s[i] -= x;
    d[j] -= x;
    if (i == p - 1 && j == q - 1) break;
    if (s[i] == 0 && i < p - 1) {
      path.moves.push_back(Move::kDown);
      ++i;
    } else {
      path.moves.push_back(Move::kRight);
      ++j;
    }
  }
  assert(path.cells.size() == static_cast<std::size_t>(p + q - 1));
  return path;
}

bool staircase_membership(const TpInstance& inst, int row, int col) {
  require_balanced(inst);
  if (row < 0 || row >= inst.p || col < 0 || col >= inst.q) {
    throw std::out_of_range("cell outside the cost matrix");
  }
  const auto s = prefix(inst.supply);
  const auto d = prefix(inst.demand);
  const bool reachable = s[row] <= d[col + 1] || row == 0;
  const bool not_passed = s[row + 1] > d[col] || row == inst.p - 1 || col == 0;
  return reachable && not_passed;
}

std::vector<int> row_start_cols(const TpInstance& inst) {
  require_balanced(inst);
  const auto s = prefix(inst.supply);
  const auto d = prefix(inst.demand);
  std::vector<int> start(inst.p, 0);
  int col = 0;
  for (int i = 1; i < inst.p; ++i) {
    while (d[col + 1] < s[i]) ++col;  // terminates: s[i] <= s[p] == d[q]
    start[i] = col;
  }
  return start;
}

std::vector<int> col_end_rows(const TpInstance& inst) {
  require_balanced(inst);
  const auto s = prefix(inst.supply);
  const auto d = prefix(inst.demand);
  std::vector<int> end(inst.q, 0);
  int row = 0;
  for (int j = 0; j < inst.q; ++j) {
    while (row + 1 < inst.p && s[row + 1] <= d[j + 1]) ++row;
    end[j] = row;
  }
  return end;
}

DualSolution dual_backward(const TpInstance& inst, const StaircasePath& path) {
  require_path_shape(inst, path);
  DualSolution dual;
  dual.u.assign(inst.p, Money{0});
  dual.v.assign(inst.q, Money{0});
  const std::size_t last = path.cells.size() - 1;
  for (std::size_t t = last + 1; t-- > 0;) {
    const Cell a = path.cells[t];
    // The final cell has no outgoing move; treating it as a down move pins
    // u[p-1] against the initial v[q-1] = 0.
    const Move out = (t == last) ? Move::kDown : path.moves[t];
    if (out == Move::kDown) {
      dual.u[a.row] = inst.cost(a.row, a.col) - dual.v[a.col];
    } else {
      dual.v[a.col] = inst.cost(a.row, a.col) - dual.u[a.row];
    }
  }
  return dual;
}

DualSolution dual_forward(const TpInstance& inst, const StaircasePath& path,
                          DualInit init) {
  require_path_shape(inst, path);
  DualSolution dual;
  dual.u.assign(inst.p, Money{0});
  dual.v.assign(inst.q, Money{0});
  // The pinned variable acts as if the walk arrived at (0,0) completing it:
  // pinning u[0] makes the first step solve for v, and vice versa.
  Move in;
  if (init.var == DualInit::Var::kU0) {
    dual.u[0] = init.value;
    in = Move::kRight;
  } else {
    dual.v[0] = init.value;
    in = Move::kDown;
  }
  for (std::size_t t = 0; t < path.cells.size(); ++t) {
    const Cell a = path.cells[t];
    if (in == Move::kRight) {
      dual.v[a.col] = inst.cost(a.row, a.col) - dual.u[a.row];
    } else {
      dual.u[a.row] = inst.cost(a.row, a.col) - dual.v[a.col];
    }
    if (t < path.moves.size()) in = path.moves[t];
  }
  return dual;
}

DualSolution duals_formula_row(const TpInstance& inst) {
  require_balanced(inst);
  const auto start = row_start_cols(inst);
  const auto& c = inst.cost;
  DualSolution dual;
  dual.u.assign(inst.p, Money{0});
  dual.v.assign(inst.q, Money{0});
  for (int i = 1; i < inst.p; ++i) {
    dual.u[i] = dual.u[i - 1] + (c(i, start[i]) - c(i - 1, start[i]));
  }
  for (int j = 0; j < inst.q; ++j) {
    Money vj = c(0, j);
    for (int k = 1; k < inst.p; ++k) {
      if (start[k] <= j) {
        vj += c(k, j) - c(k - 1, j) - c(k, start[k]) + c(k - 1, start[k]);
      }
    }
    dual.v[j] = vj;
  }
  return dual;
}

DualSolution duals_formula_col(const TpInstance& inst) {
  require_balanced(inst);
  const auto end = col_end_rows(inst);
  const auto& c = inst.cost;
  DualSolution dual;
  dual.u.assign(inst.p, Money{0});
  dual.v.assign(inst.q, Money{0});
  for (int j = 1; j < inst.q; ++j) {
    dual.v[j] = dual.v[j - 1] + (c(end[j - 1], j) - c(end[j - 1], j - 1));
  }
  for (int i = 0; i < inst.p; ++i) {
    Money ui = c(i, 0);
    for (int k = 1; k < inst.q; ++k) {
      if (end[k - 1] <= i) {
        ui += c(i, k) - c(i, k - 1) - c(end[k - 1], k) + c(end[k - 1], k - 1);
      }
    }
    dual.u[i] = ui;
  }
  return dual;
}

}  // namespace mongedomp
