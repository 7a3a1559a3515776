#include "mongedomp/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "mongedomp/generator.hpp"
#include "mongedomp/oracles.hpp"

namespace mongedomp {

std::string method_tag(Method method) {
  switch (method) {
    case Method::kBendersB1: return "benders-b1";
    case Method::kBendersB2: return "benders-b2";
    case Method::kEnum: return "enum";
  }
  throw std::invalid_argument("unknown method");
}

Method method_from_tag(std::string_view tag) {
  if (tag == "benders-b1") return Method::kBendersB1;
  if (tag == "benders-b2") return Method::kBendersB2;
  if (tag == "enum") return Method::kEnum;
  throw std::invalid_argument("unknown method tag: " + std::string(tag));
}

double relative_gap(Money objective, Money bound) {
  if (objective == bound) return 0.0;
  if (objective == Money{0}) return std::numeric_limits<double>::infinity();
  return static_cast<double>(objective.scaled() - bound.scaled()) /
         std::abs(static_cast<double>(objective.scaled()));
}

namespace {

struct Job {
  int n;
  int p;
  int denom;
  LambdaFamily family;
  std::uint64_t seed;
  Method method;
};

std::string make_instance_id(const Job& job) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "n%02d_d%d_%s_s%llu", job.n, job.denom,
                family_tag(job.family).c_str(),
                static_cast<unsigned long long>(job.seed));
  return buf;
}

ResultRow run_job(const Job& job, const SuiteLimits& limits) {
  ResultRow row;
  row.instance_id = make_instance_id(job);
  row.n = job.n;
  row.p = job.p;
  row.lambda_tag = family_tag(job.family);
  row.seed = job.seed;
  row.method = method_tag(job.method);
  try {
    const DompInstance inst =
        generate_instance(job.n, job.p, job.seed, job.family);
    if (job.method == Method::kEnum) {
      const auto t0 = std::chrono::steady_clock::now();
      const EnumResult res = domp_enumerate(inst);
      row.status = "optimal";
      row.objective = res.value;
      row.bound = res.value;
      row.iterations = 1;
      if (limits.measure_time) {
        row.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
      }
    } else {
      const Orientation orientation = job.method == Method::kBendersB1
                                          ? Orientation::kB1
                                          : Orientation::kB2;
      SolveLimits solve_limits;
      solve_limits.epsilon = limits.epsilon;
      solve_limits.time_limit_ms = limits.time_limit_ms;
      const BendersLog log = solve_benders(inst, orientation, solve_limits);
      row.objective = log.incumbent;
      row.bound = log.bound;
      row.gap = relative_gap(log.incumbent, log.bound);
      row.status = (log.converged && row.gap == 0.0) ? "optimal" : "limit";
      row.iterations = log.iterations;
      row.cuts_added = log.cuts.size();
      if (limits.measure_time) {
        row.time_ms = log.wall_time_ms;
        row.separation_time_ms = log.separation_time_ms;
      }
    }
  } catch (const std::exception&) {
    row.status = "error";
    row.objective = Money{0};
    row.bound = Money{0};
    row.gap = 0.0;
    row.iterations = 0;
    row.cuts_added = 0;
    row.time_ms = 0;
    row.separation_time_ms = 0;
  }
  return row;
}

}  // namespace

std::vector<ResultRow> run_suite(const SuiteGrid& grid,
                                 const std::vector<Method>& methods,
                                 const SuiteLimits& limits, Exec exec) {
  std::vector<Job> jobs;
  for (const int n : grid.ns) {
    for (const int denom : grid.p_denoms) {
      const int p = std::max(1, n / denom);
      for (const LambdaFamily family : grid.families) {
        for (const std::uint64_t seed : grid.seeds) {
          for (const Method method : methods) {
            jobs.push_back({n, p, denom, family, seed, method});
          }
        }
      }
    }
  }

  std::vector<ResultRow> rows(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for if (exec == Exec::kParallel) schedule(dynamic)
#else
  (void)exec;
#endif
  for (long long i = 0; i < static_cast<long long>(jobs.size()); ++i) {
    rows[i] = run_job(jobs[i], limits);
  }

  std::sort(rows.begin(), rows.end(),
            [](const ResultRow& a, const ResultRow& b) {
              if (a.instance_id != b.instance_id) {
                return a.instance_id < b.instance_id;
              }
              return a.method < b.method;
            });
  return rows;
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::string out =
      "instance_id,n,p,lambda_tag,seed,method,status,objective,bound,gap,"
      "time_ms,iterations,cuts_added,separation_time_ms\n";
  char buf[160];
  for (const ResultRow& r : rows) {
    out += r.instance_id;
    std::snprintf(buf, sizeof(buf), ",%d,%d,", r.n, r.p);
    out += buf;
    out += r.lambda_tag;
    std::snprintf(buf, sizeof(buf), ",%llu,",
                  static_cast<unsigned long long>(r.seed));
    out += buf;
    out += r.method;
    out += ',';
    out += r.status;
    out += ',';
    out += r.objective.str();
    out += ',';
    out += r.bound.str();
    std::snprintf(buf, sizeof(buf), ",%.6f,%lld,%llu,%llu,%lld\n", r.gap,
                  static_cast<long long>(r.time_ms),
                  static_cast<unsigned long long>(r.iterations),
                  static_cast<unsigned long long>(r.cuts_added),
                  static_cast<long long>(r.separation_time_ms));
    out += buf;
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << to_csv(rows);
}

}  // namespace mongedomp
