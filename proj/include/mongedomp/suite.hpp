#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mongedomp/benders.hpp"
#include "mongedomp/lambda.hpp"

namespace mongedomp {

enum class Method { kBendersB1, kBendersB2, kEnum };

/// Method tag used in flags and the CSV: "benders-b1", "benders-b2", "enum".
std::string method_tag(Method method);
Method method_from_tag(std::string_view tag);

/// Cartesian test grid. p is derived per denominator as max(1, n / denom);
/// duplicate p values (e.g. n=8 gives floor(n/4) == floor(n/3)) stay as
/// separate rows, told apart by the denominator in the instance id.
struct SuiteGrid {
  std::vector<int> ns = {6, 8, 10, 12};
  std::vector<int> p_denoms = {4, 3, 2};
  std::vector<LambdaFamily> families = all_families();
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
};

struct SuiteLimits {
  Money epsilon{0};
  std::int64_t time_limit_ms = 0;  // 0 = unlimited
  /// When false (the default), the time columns are reported as zero so
  /// that identical runs emit byte-identical CSV.
  bool measure_time = false;
};

struct ResultRow {
  std::string instance_id;  // e.g. n08_d3_median_s1
  int n = 0;
  int p = 0;
  std::string lambda_tag;
  std::uint64_t seed = 0;
  std::string method;
  std::string status;  // optimal | limit | error
  Money objective{0};
  Money bound{0};
  double gap = 0.0;  // (objective - bound) / |objective|
  std::int64_t time_ms = 0;
  std::uint64_t iterations = 0;
  std::uint64_t cuts_added = 0;
  std::int64_t separation_time_ms = 0;
};

/// Relative optimality gap, solver convention: 0 when the bounds meet,
/// +inf when objective == 0 != bound.
double relative_gap(Money objective, Money bound);

/// One row per (grid point, method), sorted by (instance_id, method).
/// Failures surface as status "error" rows, never as exceptions. exec
/// fans rows out across threads; output is identical either way.
std::vector<ResultRow> run_suite(const SuiteGrid& grid,
                                 const std::vector<Method>& methods,
                                 const SuiteLimits& limits = {},
                                 Exec exec = Exec::kSerial);

/// CSV with the fixed header
/// instance_id,n,p,lambda_tag,seed,method,status,objective,bound,gap,
/// time_ms,iterations,cuts_added,separation_time_ms
/// Money columns carry two decimals, gap six.
std::string to_csv(const std::vector<ResultRow>& rows);
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

}  // namespace mongedomp
