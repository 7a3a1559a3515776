#pragma once

#include <cstdint>
#include <vector>

#include "mongedomp/domp.hpp"
#include "mongedomp/subsets.hpp"

namespace mongedomp {

/// Which of the two equivalent staircase encodings a cut is written in.
/// kB1 maps sorted positions to rungs, kB2 maps rungs to positions; both
/// describe the same staircase path on the n x (g+1) grid and both produce
/// the same dual vectors.
enum class Orientation { kB1, kB2 };

/// A monotone staircase encoding.
///   kB1: f has n entries, f[0] == 0, non-decreasing, values are 0-based
///        rung indices in [0, g];
///   kB2: f has g entries, non-decreasing, values are 1-based sorted
///        positions in [1, n].
struct StaircaseEncoding {
  Orientation orientation;
  std::vector<int> f;

  friend bool operator==(const StaircaseEncoding&,
                         const StaircaseEncoding&) = default;
};

/// Throws std::invalid_argument unless enc is a valid encoding for an
/// instance with n positions and ladder top g.
void validate_encoding(const StaircaseEncoding& enc, int n, int g);

/// Dual vectors of the rung subproblem: u per sorted position (n entries),
/// v per rung (g+1 entries).
struct DualPair {
  std::vector<Money> u;
  std::vector<Money> v;
};

/// Duals from a kB1 encoding:
///   u_l = sum_{k <= l} (lambda_k - lambda_{k-1}) t_{f(k)}        (k >= 1)
///   v_h = sum_{k: f(k) < h} (lambda_k - lambda_{k-1}) (t_h - t_{f(k)})
/// with lambda_{-1} taken as 0 and t the ladder values.
DualPair duals_b1(const DompInstance& inst, const CostLadder& ladder,
                  const StaircaseEncoding& enc);

/// Duals from a kB2 encoding:
///   u_l = sum_{k: f(k) <= l} (lambda_l - lambda_{f(k)-1}) (t_{k+1} - t_k)
///   v_h = sum_{k < h} lambda_{f(k)-1} (t_{k+1} - t_k)
/// (u indexed by 0-based position l, f(k) 1-based). Numerically identical
/// to duals_b1 of the converted encoding.
DualPair duals_b2(const DompInstance& inst, const CostLadder& ladder,
                  const StaircaseEncoding& enc);

/// One optimality cut theta >= constant + <rung_coeff, rung histogram>.
struct BendersCut {
  Money constant{0};              // sum of the u vector
  std::vector<Money> rung_coeff;  // the v vector, g+1 entries
  StaircaseEncoding encoding;

  Money rhs(const std::vector<std::int64_t>& xbar) const;
};

/// Coefficient the cut puts on an allocation variable with cost cost_ij,
/// i.e. the v entry of that cost's rung.
Money model_coefficient(const BendersCut& cut, const CostLadder& ladder,
                        Money cost_ij);

BendersCut cut_from_encoding(const DompInstance& inst, const CostLadder& ladder,
                             const StaircaseEncoding& enc);

/// Aggregated right-hand side of the cut induced by enc, evaluated at an
/// open set, via the orientation's collapsed one-line formula rather than
/// the dual vectors. Agrees with cut_from_encoding(...).rhs(histogram) on
/// every input; the tests insist on it.
Money cut_rhs_closed_form(const DompInstance& inst, const CostLadder& ladder,
                          const StaircaseEncoding& enc,
                          const std::vector<int>& open);

/// Recovers the encoding of the staircase path that the greedy rule
/// traverses on the rung subproblem with demand histogram xbar, using only
/// prefix sums of xbar.
StaircaseEncoding encoding_from_histogram(const std::vector<std::int64_t>& xbar,
                                          int n, Orientation orientation);

/// Rewrites an encoding in the other orientation (same staircase path).
StaircaseEncoding convert_encoding(const StaircaseEncoding& enc, int n, int g);

/// Number of monotone encodings for either orientation: the number of
/// monotone maps from n-1 positions into g+1 rungs, binom(n+g-1, n-1).
std::uint64_t encoding_count(int n, int g);

/// All encodings of one orientation in lexicographic order. Refuses (with
/// std::length_error) when encoding_count exceeds cap.
std::vector<StaircaseEncoding> enumerate_encodings(
    int n, int g, Orientation orientation, std::uint64_t cap = 1000000);

/// Whether the full B1 and B2 cut families coincide as sets of
/// (constant, rung coefficients) pairs. Subject to the same cap as
/// enumerate_encodings.
bool cutsets_equal(const DompInstance& inst, const CostLadder& ladder,
                   std::uint64_t cap = 1000000);

/// Outcome of one separation attempt.
struct Separation {
  BendersCut cut;
  Money rhs{0};
  bool violated = false;
};

/// Builds the cut for the histogram's encoding and flags it violated when
/// theta_bar < rhs - epsilon.
Separation separate(const DompInstance& inst, const CostLadder& ladder,
                    const std::vector<std::int64_t>& xbar, Money theta_bar,
                    Money epsilon, Orientation orientation);

struct SolveLimits {
  Money epsilon{0};
  std::int64_t time_limit_ms = 0;    // 0 = unlimited
  std::uint64_t max_iterations = 0;  // 0 = unlimited
};

struct BendersLog {
  bool converged = false;
  std::uint64_t iterations = 0;
  Money incumbent{0};
  std::vector<int> best_open;
  Money bound{0};
  Money gap{0};  // incumbent - bound, absolute money units
  std::int64_t wall_time_ms = 0;
  std::int64_t separation_time_ms = 0;
  std::vector<BendersCut> cuts;
  std::vector<std::vector<int>> cut_origins;  // open set that produced each cut
  std::vector<Money> bound_trace;             // master minimum per iteration
  std::vector<Money> incumbent_trace;         // best value seen per iteration
};

/// Exact Benders loop over an explicitly enumerated master: every p-subset
/// keeps the max right-hand side of the cuts so far (seeded with the
/// instance-wide theta bound), each iteration picks the subset with the
/// smallest master value (lexicographically smallest on ties), evaluates
/// it, and separates at its histogram. With epsilon == 0 this converges to
/// gap 0; encodings never repeat, so the iteration count is at most
/// encoding_count(n, g) + 1. Subject to subset_enum_cap() like the
/// brute-force oracle. exec picks the master-scan kernel only; results are
/// identical either way.
BendersLog solve_benders(const DompInstance& inst, Orientation orientation,
                         const SolveLimits& limits = {},
                         Exec exec = Exec::kSerial);

}  // namespace mongedomp
