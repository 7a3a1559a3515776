#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mongedomp/domp.hpp"
#include "mongedomp/subsets.hpp"
#include "mongedomp/tp.hpp"

namespace mongedomp {

/// Exact optimal value of a balanced transportation instance, computed by
/// successive shortest paths on the bipartite flow network (Bellman-Ford,
/// since arc costs may be negative). Shares nothing with the greedy solver
/// and never looks at Monge structure, so it can referee it.
Money tp_optimal_value(const TpInstance& inst);

/// Refusal to brute-force an instance larger than the enumeration guard.
struct EnumCapError : std::runtime_error {
  explicit EnumCapError(const std::string& what) : std::runtime_error(what) {}
};

struct EnumResult {
  Money value;
  std::vector<int> open;  // lexicographically smallest optimal open set
};

/// Brute force over all p-subsets of sites. Throws EnumCapError when n
/// exceeds subset_enum_cap(). The serial and parallel kernels return
/// identical results, including the tie-break.
EnumResult domp_enumerate(const DompInstance& inst, Exec exec = Exec::kSerial);

}  // namespace mongedomp
