// Acceptance gate: one line per criterion, pass/fail, with timings.
// Everything is exact integer arithmetic; "equals" below always means
// equality of scaled money values, never a tolerance.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mongedomp/benders.hpp"
#include "mongedomp/generator.hpp"
#include "mongedomp/northwest.hpp"
#include "mongedomp/oracles.hpp"
#include "mongedomp/suite.hpp"

using namespace mongedomp;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int failures = 0;

void report(int id, bool pass, const std::string& text, double secs) {
  if (!pass) ++failures;
  std::printf("[%2d] %s  %s (%.2f s)\n", id, pass ? "pass" : "FAIL",
              text.c_str(), secs);
  std::fflush(stdout);
}

std::vector<TpInstance> monge_pool() {
  mdtest::SplitMix64 rng{101};
  std::vector<TpInstance> pool;
  pool.reserve(1000);
  for (int t = 0; t < 1000; ++t)
    pool.push_back(mdtest::random_monge_tp(rng, 12, 20, t % 2 ? 80 : 0));
  return pool;
}

bool membership_matches(const TpInstance& inst) {
  const StaircasePath path = northwest_corner(inst);
  std::set<std::pair<int, int>> on_path;
  for (const Cell& c : path.cells) on_path.insert({c.row, c.col});
  std::vector<int> first_col(inst.p, inst.q), last_row(inst.q, -1);
  for (const Cell& c : path.cells) {
    first_col[c.row] = std::min(first_col[c.row], c.col);
    last_row[c.col] = std::max(last_row[c.col], c.row);
  }
  for (int i = 0; i < inst.p; ++i)
    for (int j = 0; j < inst.q; ++j)
      if (staircase_membership(inst, i, j) !=
          static_cast<bool>(on_path.count({i, j})))
        return false;
  return row_start_cols(inst) == first_col && col_end_rows(inst) == last_row;
}

void compositions(int total, int k,
                  const std::function<void(const std::vector<std::int64_t>&)>& fn,
                  std::vector<std::int64_t>& acc) {
  if (k == 1) {
    acc.push_back(total);
    fn(acc);
    acc.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    acc.push_back(x);
    compositions(total - x, k - 1, fn, acc);
    acc.pop_back();
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main() {
  // --- 1: greedy primal equals the closed-form dual objectives, exactly.
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<TpInstance> pool = monge_pool();
  bool ok = true;
  for (const TpInstance& inst : pool) {
    const StaircasePath path = northwest_corner(inst);
    const Money primal = path.objective(inst);
    for (const DualSolution& d :
         {duals_formula_row(inst), duals_formula_col(inst),
          dual_backward(inst, path), dual_forward(inst, path)})
      ok = ok && d.feasible_for(inst) && d.objective(inst) == primal;
  }
  double elapsed = seconds_since(t0);
  report(1, ok && elapsed < 10.0,
         "strong duality on 1000 Monge instances, four dual routes, exact",
         elapsed);

  // --- 2: closed-form cell membership and index formulas match traversal.
  t0 = std::chrono::steady_clock::now();
  ok = true;
  for (const TpInstance& inst : pool) ok = ok && membership_matches(inst);
  int grid_count = 0;
  for (int p = 1; p <= 3 && ok; ++p)
    for (int q = 1; q <= 3 && ok; ++q)
      for (int total = 0; total <= 6 && ok; ++total) {
        std::vector<std::vector<std::int64_t>> ss, ds;
        std::vector<std::int64_t> acc;
        compositions(total, p,
                     [&](const std::vector<std::int64_t>& s) { ss.push_back(s); },
                     acc);
        compositions(total, q,
                     [&](const std::vector<std::int64_t>& d) { ds.push_back(d); },
                     acc);
        for (const auto& s : ss)
          for (const auto& d : ds) {
            ok = ok && membership_matches(TpInstance(s, d, MoneyMatrix(p, q)));
            ++grid_count;
          }
      }
  report(2, ok,
         "staircase membership and index formulas match traversal on the "
         "pool plus " + std::to_string(grid_count) + " exhaustive shapes",
         seconds_since(t0));

  // --- 3: greedy equals an independent min-cost-flow oracle under Monge,
  //        and loses strictly on a crafted non-Monge matrix.
  t0 = std::chrono::steady_clock::now();
  ok = true;
  for (const TpInstance& inst : pool)
    ok = ok && northwest_corner(inst).objective(inst) == tp_optimal_value(inst);
  const TpInstance crafted({1, 1}, {1, 1},
                           mdtest::money_matrix(2, 2, {1, 2, 2, 4}));
  ok = ok && northwest_corner(crafted).objective(crafted) == Money{5} &&
       tp_optimal_value(crafted) == Money{4};
  report(3, ok, "flow oracle confirms greedy optimality (and its Monge limits)",
         seconds_since(t0));

  // --- 4: the rung subproblem reproduces the ordered median value.
  t0 = std::chrono::steady_clock::now();
  ok = true;
  {
    mdtest::SplitMix64 rng{103};
    for (int t = 0; t < 200; ++t) {
      const DompInstance inst =
          t % 2 == 0 ? mdtest::random_coarse_domp(rng, 12, 8)
                     : generate_instance(
                           3 + static_cast<int>(rng.next_below(10)), 1,
                           rng.next(), LambdaFamily::kRandom);
      const CostLadder ladder(inst.cost);
      const auto open = mdtest::random_subset(rng, inst.n, inst.p);
      const auto xbar = xbar_histogram(inst, ladder, open);
      ok = ok && tp_optimal_value(subproblem_tp(inst, ladder, xbar)) ==
                     ordered_median_value(inst, open);
    }
  }
  report(4, ok, "200 rung subproblems equal their ordered median values",
         seconds_since(t0));

  // --- 5..9 share one sweep over the full desk grid.
  const std::vector<int> ns = {6, 8, 10, 12};
  const std::vector<int> denoms = {4, 3, 2};
  bool ok5 = true, ok6 = true, ok8_lockstep = true, ok9 = true;
  int instances = 0;
  std::uint64_t total_cuts = 0;
  double secs5 = 0, secs6 = 0;
  for (int n : ns)
    for (int denom : denoms)
      for (LambdaFamily family : all_families())
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
          t0 = std::chrono::steady_clock::now();
          const DompInstance inst =
              generate_instance(n, std::max(1, n / denom), seed, family);
          const CostLadder ladder(inst.cost);
          const EnumResult truth = domp_enumerate(inst, Exec::kParallel);
          const BendersLog b1 =
              solve_benders(inst, Orientation::kB1, {}, Exec::kParallel);
          const BendersLog b2 =
              solve_benders(inst, Orientation::kB2, {}, Exec::kParallel);
          ++instances;

          for (const BendersLog* log : {&b1, &b2}) {
            ok5 = ok5 && log->converged && log->incumbent == truth.value &&
                  log->bound == truth.value && log->gap == Money{0};
            try {
              ok5 = ok5 &&
                    log->iterations <= encoding_count(inst.n, ladder.g()) + 1;
            } catch (const std::overflow_error&) {
              // encoding count beyond 64 bits; any finite run is below it
            }
          }
          total_cuts += b1.cuts.size() + b2.cuts.size();

          // both orientations must separate coefficient-identical cuts
          ok8_lockstep = ok8_lockstep && b1.cuts.size() == b2.cuts.size();
          for (std::size_t i = 0;
               ok8_lockstep && i < b1.cuts.size(); ++i)
            ok8_lockstep = b1.cuts[i].constant == b2.cuts[i].constant &&
                           b1.cuts[i].rung_coeff == b2.cuts[i].rung_coeff;

          ok9 = ok9 && theta_lower_bound(inst) <= truth.value;
          secs5 += seconds_since(t0);

          // validity at every open set, tightness at the generating one
          t0 = std::chrono::steady_clock::now();
          enumerate_p_subsets(inst.n, inst.p, [&](const std::vector<int>& open) {
            if (!ok6) return;
            const Money val = ordered_median_value(inst, open);
            std::vector<int> ranks;
            for (Money c : sorted_alloc_costs(inst, open))
              ranks.push_back(ladder.rank(c));
            for (const BendersCut& cut : b1.cuts) {
              Money rhs = cut.constant;
              for (int r : ranks) rhs += cut.rung_coeff[r];
              if (!(rhs <= val)) {
                ok6 = false;
                return;
              }
            }
          });
          for (std::size_t i = 0; ok6 && i < b1.cuts.size(); ++i) {
            const auto origin_xbar =
                xbar_histogram(inst, ladder, b1.cut_origins[i]);
            ok6 = b1.cuts[i].rhs(origin_xbar) ==
                  ordered_median_value(inst, b1.cut_origins[i]);
          }
          secs6 += seconds_since(t0);
        }
  report(5,
         ok5 && secs5 + secs6 < 900.0,
         "both cut loops hit the brute-force optimum on all " +
             std::to_string(instances) + " grid instances, gap 0",
         secs5);
  report(6, ok6,
         "all " + std::to_string(total_cuts / 2) +
             " separated cuts valid at every open set, tight at their origin",
         secs6);

  // --- 7: monotone encodings are counted by a binomial coefficient.
  t0 = std::chrono::steady_clock::now();
  ok = true;
  for (int n = 1; n <= 5; ++n)
    for (int g = 1; g <= 5; ++g)
      for (Orientation o : {Orientation::kB1, Orientation::kB2})
        ok = ok && enumerate_encodings(n, g, o).size() ==
                       binomial(n + g - 1, n - 1);
  report(7, ok, "encoding families counted exactly for n, g up to 5",
         seconds_since(t0));

  // --- 8: the two orientations generate one and the same cut family.
  t0 = std::chrono::steady_clock::now();
  ok = true;
  {
    mdtest::SplitMix64 rng{107};
    for (int t = 0; t < 20; ++t) {
      const DompInstance inst = mdtest::random_coarse_domp(rng, 4, 4);
      ok = ok && cutsets_equal(inst, CostLadder(inst.cost));
    }
  }
  report(8, ok && ok8_lockstep,
         "cut families coincide on 20 coarse instances; grid separations "
         "were coefficient-identical",
         seconds_since(t0));

  // --- 9: the instance-wide bound and its closed form.
  t0 = std::chrono::steady_clock::now();
  ok = ok9;
  for (int n : ns)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const MoneyMatrix cost = random_cost_matrix(n, seed);
      const DompInstance ones(n, 1, cost, std::vector<std::int64_t>(n, 1));
      Money row_minima{0};
      for (int i = 0; i < n; ++i) {
        Money m = cost(i, 0);
        for (int j = 1; j < n; ++j) m = std::min(m, cost(i, j));
        row_minima += m;
      }
      ok = ok && theta_lower_bound(ones) == row_minima;
    }
  report(9, ok,
         "the seed bound never exceeds the optimum; all-unit weights give "
         "the sorted-row-minima form",
         seconds_since(t0));

  // --- 10: the bench command is byte-deterministic.
  t0 = std::chrono::steady_clock::now();
  ok = false;
  if (const char* bin = std::getenv("MONGEDOMP_CLI")) {
    const std::string flags =
        " bench --ns 6 8 --denoms 2 --families median krange random "
        "--seeds 2 --methods benders-b1 benders-b2 enum --epsilon 0 --out ";
    const std::string run1 =
        "\"" + std::string(bin) + "\"" + flags + "acc_bench_1.csv";
    const std::string run2 =
        "\"" + std::string(bin) + "\"" + flags + "acc_bench_2.csv";
    if (std::system(run1.c_str()) == 0 && std::system(run2.c_str()) == 0) {
      const std::string a = slurp("acc_bench_1.csv");
      ok = !a.empty() && a == slurp("acc_bench_2.csv") &&
           a.rfind("instance_id,", 0) == 0;
    }
    report(10, ok, "two identical bench runs emit byte-identical CSV",
           seconds_since(t0));
  } else {
    report(10, false, "MONGEDOMP_CLI not set; cannot drive the bench command",
           seconds_since(t0));
  }

  std::printf("summary: %d/10 pass\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
