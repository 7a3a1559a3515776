#pragma once

#include "mongedomp/tp.hpp"

namespace mongedomp {

/// Greedy northwest-corner rule. Starts at (0,0), ships as much as possible,
/// moves down when the current supply is exhausted (and more rows remain),
/// otherwise right. Requires a balanced instance; at exit every remaining
/// supply and demand is zero and the path has p + q - 1 cells.
StaircasePath northwest_corner(const TpInstance& inst);

/// Closed-form membership test for the cell set traversed by the greedy
/// rule, evaluated from supply/demand prefix sums alone (no traversal):
///   (S_{i-1} <= D_j  or  i is the first row)  and
///   (S_i > D_{j-1}   or  i is the last row  or  j is the first column)
/// with S, D the inclusive prefix sums. Indices are 0-based.
bool staircase_membership(const TpInstance& inst, int row, int col);

/// First column the path visits in each row (0-based), computed from prefix
/// sums: entry i is min{ j : S_{i-1} <= D_j }. Entry 0 is always 0.
std::vector<int> row_start_cols(const TpInstance& inst);

/// Last row the path visits in each column (0-based), computed from prefix
/// sums: entry j is max{ i : S_{i-1} <= D_j }. Entry q-1 is always p-1.
std::vector<int> col_end_rows(const TpInstance& inst);

/// Backward dual recursion over the staircase path: fixes v_{q-1} = 0 and
/// walks the path from its last cell to its first, setting u on cells left
/// by a down move and v on cells left by a right move.
DualSolution dual_backward(const TpInstance& inst, const StaircasePath& path);

/// Starting value for the forward dual recursion: pin either u_0 or v_0.
struct DualInit {
  enum class Var { kU0, kV0 };
  Var var = Var::kU0;
  Money value{0};

  static DualInit u0(Money b) { return {Var::kU0, b}; }
  static DualInit v0(Money b) { return {Var::kV0, b}; }
};

/// Forward dual recursion: pins the initial dual (default u_0 = 0) and walks
/// the path front to back. With u_0 = 0 this returns the backward solution
/// shifted by (-u_0_backward, +u_0_backward); the shift preserves dual
/// feasibility and the objective on balanced instances.
DualSolution dual_forward(const TpInstance& inst, const StaircasePath& path,
                          DualInit init = DualInit::u0(Money{0}));

/// Closed-form duals equal to dual_forward with u_0 = 0, computed directly
/// from the row-start columns j_i:
///   u_i = sum_{k=1..i} ( c[k][j_k] - c[k-1][j_k] )
///   v_j = c[0][j] + sum_{k>=1, j_k<=j} ( c[k][j] - c[k-1][j]
///                                        - c[k][j_k] + c[k-1][j_k] )
DualSolution duals_formula_row(const TpInstance& inst);

/// Closed-form duals equal to dual_forward with v_0 = 0, computed from the
/// column-end rows i_j; elementwise this is duals_formula_row shifted by
/// (+c[0][0], -c[0][0]).
DualSolution duals_formula_col(const TpInstance& inst);

}  // namespace mongedomp
