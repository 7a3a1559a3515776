// Command-line front end for the Monge transportation / DOMP toolkit.
//
// Subcommands: solve-tp, solve-domp, gen, bench, verify. Exit codes are a
// stable contract: 0 ok, 2 input parse failure, 3 unbalanced instance,
// 4 check/verify failure, 5 enumeration cap exceeded. Flag-level mistakes
// are reported by CLI11 with its own codes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mongedomp/benders.hpp"
#include "mongedomp/generator.hpp"
#include "mongedomp/json_io.hpp"
#include "mongedomp/northwest.hpp"
#include "mongedomp/oracles.hpp"
#include "mongedomp/rng.hpp"
#include "mongedomp/suite.hpp"

namespace md = mongedomp;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitUnbalanced = 3;
constexpr int kExitCheck = 4;
constexpr int kExitCap = 5;

md::Money money_from_units(double units) {
  return md::Money{static_cast<std::int64_t>(std::llround(units * 100.0))};
}

std::string money_list(const std::vector<md::Money>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].str();
  }
  return out + ")";
}

std::string int_list(const std::vector<std::int64_t>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

// Site sets print 1-based: {3} means the third site.
std::string site_set(const std::vector<int>& open) {
  std::string out = "{";
  for (std::size_t i = 0; i < open.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(open[i] + 1);
  }
  return out + "}";
}

// ---------------------------------------------------------------- solve-tp

struct SolveTpArgs {
  std::string file;
  std::string duals;  // empty | backward | forward | formula-row | formula-col
  bool check = false;
};

int run_solve_tp(const SolveTpArgs& args) {
  std::ifstream in(args.file);
  if (!in) {
    std::fprintf(stderr, "error: cannot open %s\n", args.file.c_str());
    return kExitParse;
  }
  md::TpInstance inst;
  try {
    inst = md::read_tp_json(in);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }
  if (!md::balanced_check(inst)) {
    std::fprintf(stderr, "error: unbalanced instance (supply %lld, demand %lld)\n",
                 static_cast<long long>(inst.total_supply()),
                 static_cast<long long>(inst.total_demand()));
    return kExitUnbalanced;
  }

  const md::StaircasePath path = md::northwest_corner(inst);
  std::printf("instance: %d x %d, total %lld\n", inst.p, inst.q,
              static_cast<long long>(inst.total_supply()));
  std::string cells, moves, ships;
  for (std::size_t t = 0; t < path.cells.size(); ++t) {
    if (t) cells += ' ';
    cells += "(" + std::to_string(path.cells[t].row + 1) + "," +
             std::to_string(path.cells[t].col + 1) + ")";
    if (t) ships += ' ';
    ships += std::to_string(path.shipments[t]);
  }
  for (std::size_t t = 0; t < path.moves.size(); ++t) {
    if (t) moves += ' ';
    moves += path.moves[t] == md::Move::kRight ? "right" : "down";
  }
  std::printf("path: %s\n", cells.c_str());
  if (!moves.empty()) std::printf("moves: %s\n", moves.c_str());
  std::printf("shipments: %s\n", ships.c_str());
  std::printf("objective: %s\n", path.objective(inst).str().c_str());

  if (!args.duals.empty()) {
    md::DualSolution d;
    if (args.duals == "backward") d = md::dual_backward(inst, path);
    else if (args.duals == "forward") d = md::dual_forward(inst, path);
    else if (args.duals == "formula-row") d = md::duals_formula_row(inst);
    else d = md::duals_formula_col(inst);
    std::printf("u = %s\n", money_list(d.u).c_str());
    std::printf("v = %s\n", money_list(d.v).c_str());
    std::printf("dual objective: %s\n", d.objective(inst).str().c_str());
  }

  if (args.check) {
    if (!md::is_monge(inst.cost)) {
      std::printf("warning: cost matrix is not Monge; "
                  "skipping the optimality checks\n");
      return 0;
    }
    const md::Money primal = path.objective(inst);
    const md::Money oracle = md::tp_optimal_value(inst);
    if (primal != oracle) {
      std::fprintf(stderr, "check failed: greedy %s != oracle %s\n",
                   primal.str().c_str(), oracle.str().c_str());
      return kExitCheck;
    }
    const md::DualSolution routes[] = {
        md::dual_backward(inst, path), md::dual_forward(inst, path),
        md::duals_formula_row(inst), md::duals_formula_col(inst)};
    const char* names[] = {"backward", "forward", "formula-row", "formula-col"};
    for (int r = 0; r < 4; ++r) {
      if (!routes[r].feasible_for(inst)) {
        std::fprintf(stderr, "check failed: %s duals infeasible\n", names[r]);
        return kExitCheck;
      }
      if (routes[r].objective(inst) != primal) {
        std::fprintf(stderr, "check failed: %s dual objective %s != primal %s\n",
                     names[r], routes[r].objective(inst).str().c_str(),
                     primal.str().c_str());
        return kExitCheck;
      }
    }
    std::printf("check: ok (Monge, optimal, strong duality on all four dual routes)\n");
  }
  return 0;
}

// -------------------------------------------------------------- solve-domp

struct SolveDompArgs {
  std::string file;
  std::string method = "benders-b1";
  bool verify = false;
  bool parallel = false;
  int n = 0;
  int p = 0;
  std::uint64_t seed = 1;
  std::string family = "median";
  double epsilon = 0.01;
  std::int64_t time_limit_ms = 0;
};

int run_solve_domp(const SolveDompArgs& args) {
  std::optional<md::DompInstance> inst;
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) {
      std::fprintf(stderr, "error: cannot open %s\n", args.file.c_str());
      return kExitParse;
    }
    try {
      inst = md::read_domp_json(in).instance;
    } catch (const std::exception& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return kExitParse;
    }
  } else if (args.n > 0) {
    const int p = args.p > 0 ? args.p : std::max(1, args.n / 2);
    try {
      inst = md::generate_instance(args.n, p, args.seed,
                                   md::family_from_tag(args.family));
    } catch (const std::exception& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return kExitParse;
    }
  } else {
    std::fprintf(stderr, "error: give an instance file or --n\n");
    return kExitParse;
  }

  const md::Exec exec = args.parallel ? md::Exec::kParallel : md::Exec::kSerial;
  const md::Money eps = money_from_units(args.epsilon);
  md::Money value{0}, bound{0};
  std::vector<int> open;
  std::uint64_t iterations = 0, cuts = 0;
  std::string status = "optimal";

  try {
    if (args.method == "enum") {
      const md::EnumResult res = md::domp_enumerate(*inst, exec);
      value = bound = res.value;
      open = res.open;
      iterations = 1;
    } else {
      const md::Orientation orient = args.method == "benders-b2"
                                         ? md::Orientation::kB2
                                         : md::Orientation::kB1;
      md::SolveLimits limits;
      limits.epsilon = eps;
      limits.time_limit_ms = args.time_limit_ms;
      const md::BendersLog log = md::solve_benders(*inst, orient, limits, exec);
      value = log.incumbent;
      bound = log.bound;
      open = log.best_open;
      iterations = log.iterations;
      cuts = log.cuts.size();
      status = log.converged && log.gap == md::Money{0} ? "optimal" : "limit";
    }
  } catch (const md::EnumCapError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCap;
  }

  std::printf("method: %s\n", args.method.c_str());
  std::printf("value: %s\n", value.str().c_str());
  std::printf("open: %s\n", site_set(open).c_str());
  std::printf("iterations: %llu\n", static_cast<unsigned long long>(iterations));
  std::printf("cuts: %llu\n", static_cast<unsigned long long>(cuts));
  std::printf("bound: %s\n", bound.str().c_str());
  std::printf("gap: %.6f\n", md::relative_gap(value, bound));
  std::printf("status: %s\n", status.c_str());

  if (args.verify) {
    md::EnumResult res;
    try {
      res = md::domp_enumerate(*inst, exec);
    } catch (const md::EnumCapError& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return kExitCap;
    }
    // A converged run lands within epsilon of the brute-force optimum, so
    // the tolerance of the cross-check is the tolerance of the solve.
    const md::Money diff = value - res.value;
    const md::Money mag = diff < md::Money{0} ? -diff : diff;
    if (mag > eps) {
      std::fprintf(stderr, "verify failed: %s got %s, brute force %s at %s\n",
                   args.method.c_str(), value.str().c_str(),
                   res.value.str().c_str(), site_set(res.open).c_str());
      return kExitCheck;
    }
    std::printf("verify: ok (brute force %s)\n", res.value.str().c_str());
  }
  return 0;
}

// --------------------------------------------------------------------- gen

struct GenArgs {
  int n = 0;
  int p = 0;  // 0 = floor(n/2), at least 1
  std::uint64_t seed = 1;
  std::string family = "median";
  std::string out;
};

int run_gen(const GenArgs& args) {
  const int p = args.p > 0 ? args.p : std::max(1, args.n / 2);
  std::optional<md::DompInstance> inst;
  try {
    inst = md::generate_instance(args.n, p, args.seed,
                                 md::family_from_tag(args.family));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }
  md::InstanceMeta meta;
  meta.seed = args.seed;
  meta.family = args.family;

  const std::string summary =
      "n=" + std::to_string(args.n) + " p=" + std::to_string(p) +
      " seed=" + std::to_string(args.seed) + " family=" + args.family +
      "\nlambda = " + int_list(inst->lambda) + "\n";
  if (args.out.empty()) {
    md::write_domp_json(std::cout, *inst, meta);
    std::fputs(summary.c_str(), stderr);
  } else {
    std::ofstream out(args.out);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", args.out.c_str());
      return kExitParse;
    }
    md::write_domp_json(out, *inst, meta);
    std::fputs(summary.c_str(), stdout);
    std::printf("wrote %s\n", args.out.c_str());
  }
  return 0;
}

// ------------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<int> ns = {6, 8, 10, 12};
  std::vector<int> denoms = {4, 3, 2};
  std::vector<std::string> families;  // empty = all nine
  int seeds = 5;                      // seeds 1..k; 0 empties the grid
  std::vector<std::string> methods = {"benders-b1", "benders-b2", "enum"};
  double epsilon = 0.01;
  std::int64_t time_limit_ms = 0;
  bool times = false;
  bool parallel = false;
  std::string out;
};

int run_bench(const BenchArgs& args) {
  md::SuiteGrid grid;
  grid.ns = args.ns;
  grid.p_denoms = args.denoms;
  grid.seeds.clear();
  for (int s = 1; s <= args.seeds; ++s) grid.seeds.push_back(s);
  std::vector<md::Method> methods;
  try {
    if (!args.families.empty()) {
      grid.families.clear();
      for (const std::string& tag : args.families)
        grid.families.push_back(md::family_from_tag(tag));
    }
    for (const std::string& tag : args.methods)
      methods.push_back(md::method_from_tag(tag));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }

  md::SuiteLimits limits;
  limits.epsilon = money_from_units(args.epsilon);
  limits.time_limit_ms = args.time_limit_ms;
  limits.measure_time = args.times;
  const md::Exec exec = args.parallel ? md::Exec::kParallel : md::Exec::kSerial;
  const std::vector<md::ResultRow> rows =
      md::run_suite(grid, methods, limits, exec);

  if (args.out.empty()) {
    md::write_csv(std::cout, rows);
  } else {
    std::ofstream out(args.out);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", args.out.c_str());
      return kExitParse;
    }
    md::write_csv(out, rows);
    std::printf("wrote %zu rows to %s\n", rows.size(), args.out.c_str());
  }
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string suite = "all";
  int max_n = 4;
  int max_g = 4;
  std::uint64_t seed = 1;
  int trials = 50;
};

// Small deterministic instance pools for the invariant suites.
md::TpInstance random_monge_tp(md::SplitMix64& rng, int max_dim,
                               std::int64_t max_unit) {
  const int p = 1 + static_cast<int>(rng.next_below(max_dim));
  const int q = 1 + static_cast<int>(rng.next_below(max_dim));
  std::vector<std::int64_t> s(p), d(q);
  std::int64_t total = 0;
  for (auto& x : s) {
    x = 1 + static_cast<std::int64_t>(rng.next_below(max_unit));
    total += x;
  }
  std::int64_t left = total;
  for (int j = 0; j + 1 < q; ++j) {
    d[j] = left > 1 ? static_cast<std::int64_t>(rng.next_below(left)) : 0;
    left -= d[j];
  }
  d[q - 1] = left;
  // Monge by construction: a_i + b_j plus a cumulative nonnegative bump.
  md::MoneyMatrix c(p, q);
  md::Matrix<std::int64_t> bump(p, q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      bump(i, j) = static_cast<std::int64_t>(rng.next_below(5));
  for (int i = 0; i < p; ++i) {
    const std::int64_t a = rng.next_below(50);
    for (int j = 0; j < q; ++j) {
      std::int64_t sum = 0;  // sum of bumps over rows <= i, cols >= j
      for (int k = 0; k <= i; ++k)
        for (int l = j; l < q; ++l) sum += bump(k, l);
      c(i, j) = md::Money{a + static_cast<std::int64_t>(j) + sum};
    }
  }
  return md::TpInstance(s, d, c);
}

md::DompInstance random_coarse_domp(md::SplitMix64& rng, int max_n, int max_g) {
  const int n = 2 + static_cast<int>(rng.next_below(std::max(1, max_n - 1)));
  const int p = 1 + static_cast<int>(rng.next_below(n));
  md::MoneyMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c(i, j) = md::Money{100 * (1 + static_cast<std::int64_t>(
                                         rng.next_below(std::max(1, max_g))))};
  std::vector<std::int64_t> lambda(n);
  for (auto& l : lambda)
    l = static_cast<std::int64_t>(rng.next_below(2 * n + 1)) - n;
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return md::DompInstance(n, p, c, lambda);
}

bool suite_staircase(const VerifyArgs& args, std::string& detail) {
  md::SplitMix64 rng{args.seed};
  int checked = 0;
  for (int t = 0; t < args.trials * 4; ++t) {
    const md::TpInstance inst = random_monge_tp(rng, 6, 8);
    const md::StaircasePath path = md::northwest_corner(inst);
    std::set<std::pair<int, int>> on_path;
    for (const md::Cell& c : path.cells) on_path.insert({c.row, c.col});
    std::vector<int> first_col(inst.p, inst.q), last_row(inst.q, -1);
    for (const md::Cell& c : path.cells) {
      first_col[c.row] = std::min(first_col[c.row], c.col);
      last_row[c.col] = std::max(last_row[c.col], c.row);
    }
    for (int i = 0; i < inst.p; ++i)
      for (int j = 0; j < inst.q; ++j)
        if (md::staircase_membership(inst, i, j) != on_path.count({i, j})) {
          detail = "membership mismatch";
          return false;
        }
    if (md::row_start_cols(inst) != first_col ||
        md::col_end_rows(inst) != last_row) {
      detail = "index formula mismatch";
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " instances";
  return true;
}

bool suite_duals(const VerifyArgs& args, std::string& detail) {
  md::SplitMix64 rng{args.seed};
  int checked = 0;
  for (int t = 0; t < args.trials * 4; ++t) {
    const md::TpInstance inst = random_monge_tp(rng, 6, 8);
    const md::StaircasePath path = md::northwest_corner(inst);
    const md::Money primal = path.objective(inst);
    if (primal != md::tp_optimal_value(inst)) {
      detail = "greedy not optimal on a Monge instance";
      return false;
    }
    const md::DualSolution routes[] = {
        md::dual_backward(inst, path), md::dual_forward(inst, path),
        md::duals_formula_row(inst), md::duals_formula_col(inst)};
    for (const md::DualSolution& d : routes)
      if (!d.feasible_for(inst) || d.objective(inst) != primal) {
        detail = "dual route broke strong duality";
        return false;
      }
    ++checked;
  }
  detail = std::to_string(checked) + " instances x 4 routes";
  return true;
}

bool suite_subproblem(const VerifyArgs& args, std::string& detail) {
  md::SplitMix64 rng{args.seed};
  int checked = 0;
  for (int t = 0; t < args.trials; ++t) {
    const md::DompInstance inst = random_coarse_domp(rng, 8, 12);
    const md::CostLadder ladder(inst.cost);
    std::vector<int> sites(inst.n);
    for (int i = 0; i < inst.n; ++i) sites[i] = i;
    for (int i = 0; i < inst.p; ++i)
      std::swap(sites[i], sites[i + rng.next_below(inst.n - i)]);
    std::vector<int> open(sites.begin(), sites.begin() + inst.p);
    std::sort(open.begin(), open.end());
    const auto xbar = md::xbar_histogram(inst, ladder, open);
    if (md::tp_optimal_value(md::subproblem_tp(inst, ladder, xbar)) !=
        md::ordered_median_value(inst, open)) {
      detail = "subproblem value != ordered median value";
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " (instance, open set) pairs";
  return true;
}

bool suite_encoding_count(const VerifyArgs& args, std::string& detail) {
  int checked = 0;
  for (int n = 1; n <= args.max_n; ++n)
    for (int g = 1; g <= args.max_g; ++g)
      for (md::Orientation o : {md::Orientation::kB1, md::Orientation::kB2}) {
        if (md::enumerate_encodings(n, g, o).size() != md::encoding_count(n, g)) {
          detail = "count off at n=" + std::to_string(n) +
                   " g=" + std::to_string(g);
          return false;
        }
        ++checked;
      }
  detail = std::to_string(checked) + " (n, g, orientation) triples";
  return true;
}

bool suite_cutset_identity(const VerifyArgs& args, std::string& detail) {
  md::SplitMix64 rng{args.seed};
  int checked = 0;
  for (int t = 0; t < std::max(1, args.trials / 2); ++t) {
    const md::DompInstance inst = random_coarse_domp(rng, args.max_n, args.max_g);
    const md::CostLadder ladder(inst.cost);
    if (!md::cutsets_equal(inst, ladder)) {
      detail = "orientations disagree on a cut set";
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " instances";
  return true;
}

bool suite_solver_agreement(const VerifyArgs& args, std::string& detail) {
  md::SplitMix64 rng{args.seed};
  int checked = 0;
  for (int t = 0; t < std::max(1, args.trials / 2); ++t) {
    const md::DompInstance inst = random_coarse_domp(rng, 7, 9);
    const md::Money truth = md::domp_enumerate(inst).value;
    for (md::Orientation o : {md::Orientation::kB1, md::Orientation::kB2}) {
      const md::BendersLog log = md::solve_benders(inst, o);
      if (!log.converged || log.incumbent != truth || log.gap != md::Money{0}) {
        detail = "cut loop missed the brute-force optimum";
        return false;
      }
    }
    ++checked;
  }
  detail = std::to_string(checked) + " instances x 2 orientations";
  return true;
}

int run_verify(const VerifyArgs& args) {
  using SuiteFn = bool (*)(const VerifyArgs&, std::string&);
  const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"staircase", suite_staircase},
      {"duals", suite_duals},
      {"subproblem", suite_subproblem},
      {"encoding-count", suite_encoding_count},
      {"cutset-identity", suite_cutset_identity},
      {"solver-agreement", suite_solver_agreement},
  };
  bool matched = false, all_ok = true;
  std::printf("%-18s %-6s %s\n", "suite", "result", "detail");
  for (const auto& [name, fn] : suites) {
    if (args.suite != "all" && args.suite != name) continue;
    matched = true;
    std::string detail;
    const bool ok = fn(args, detail);
    all_ok = all_ok && ok;
    std::printf("%-18s %-6s %s\n", name.c_str(), ok ? "pass" : "FAIL",
                detail.c_str());
  }
  if (!matched) {
    std::fprintf(stderr, "error: unknown suite %s\n", args.suite.c_str());
    return kExitParse;
  }
  return all_ok ? 0 : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Monge transportation and ordered-median toolkit"};
  app.require_subcommand(1);

  SolveTpArgs tp_args;
  CLI::App* tp = app.add_subcommand(
      "solve-tp", "Greedy staircase solve of a balanced transportation file");
  tp->add_option("file", tp_args.file, "TP instance (JSON)")->required();
  tp->add_option("--duals", tp_args.duals, "also print a dual solution")
      ->check(CLI::IsMember({"backward", "forward", "formula-row", "formula-col"}));
  tp->add_flag("--check", tp_args.check,
               "verify Monge property, optimality, and strong duality");

  SolveDompArgs sd_args;
  CLI::App* sd = app.add_subcommand("solve-domp",
                                    "Exact ordered-median solve");
  sd->add_option("file", sd_args.file, "DOMP instance (JSON)");
  sd->add_option("--method", sd_args.method, "benders-b1 | benders-b2 | enum")
      ->check(CLI::IsMember({"benders-b1", "benders-b2", "enum"}));
  sd->add_flag("--verify", sd_args.verify, "cross-check against brute force");
  sd->add_flag("--parallel", sd_args.parallel, "use the OpenMP scan kernels");
  sd->add_option("--n", sd_args.n, "generate: number of sites");
  sd->add_option("--p", sd_args.p, "generate: open facilities (default n/2)");
  sd->add_option("--seed", sd_args.seed, "generate: seed");
  sd->add_option("--family", sd_args.family, "generate: weight family");
  sd->add_option("--epsilon", sd_args.epsilon,
                 "cut violation tolerance, original units")
      ->check(CLI::NonNegativeNumber);
  sd->add_option("--time-limit-ms", sd_args.time_limit_ms, "0 = unlimited");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Write a reproducible instance");
  gen->add_option("--n", gen_args.n, "number of sites")->required();
  gen->add_option("--p", gen_args.p, "open facilities (default n/2)");
  gen->add_option("--seed", gen_args.seed, "seed");
  gen->add_option("--family", gen_args.family, "weight family tag");
  gen->add_option("--out", gen_args.out, "output path (default stdout)");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Run the grid suite to CSV");
  bench->add_option("--ns", bench_args.ns, "site counts");
  bench->add_option("--denoms", bench_args.denoms,
                    "p denominators: p = max(1, n/denom)");
  bench->add_option("--families", bench_args.families,
                    "weight families (default all nine)");
  bench->add_option("--seeds", bench_args.seeds, "seed count, runs 1..k")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--methods", bench_args.methods, "methods to run");
  bench->add_option("--epsilon", bench_args.epsilon,
                    "cut violation tolerance, original units")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--time-limit-ms", bench_args.time_limit_ms, "per solve");
  bench->add_flag("--times", bench_args.times,
                  "measure wall times (off keeps CSV byte-stable)");
  bench->add_flag("--parallel", bench_args.parallel, "fan rows out with OpenMP");
  bench->add_option("--out", bench_args.out, "CSV path (default stdout)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--suite", verify_args.suite,
                     "all | staircase | duals | subproblem | encoding-count | "
                     "cutset-identity | solver-agreement");
  verify->add_option("--max-n", verify_args.max_n, "size cap for counting suites");
  verify->add_option("--max-g", verify_args.max_g, "ladder cap for counting suites");
  verify->add_option("--seed", verify_args.seed, "suite seed");
  verify->add_option("--trials", verify_args.trials, "random trials per suite")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (tp->parsed()) return run_solve_tp(tp_args);
  if (sd->parsed()) return run_solve_domp(sd_args);
  if (gen->parsed()) return run_gen(gen_args);
  if (bench->parsed()) return run_bench(bench_args);
  if (verify->parsed()) return run_verify(verify_args);
  return 0;
}
