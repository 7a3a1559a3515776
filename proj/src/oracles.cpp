#include "mongedomp/oracles.hpp"

#include <cstdint>
#include <limits>
#include <utility>

namespace mongedomp {

namespace {

struct Edge {
  int to;
  std::int64_t cap;
  std::int64_t cost;
  int rev;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  void add_edge(int from, int to, std::int64_t cap, std::int64_t cost) {
    adj_[from].push_back({to, cap, cost, static_cast<int>(adj_[to].size())});
    adj_[to].push_back({from, 0, -cost, static_cast<int>(adj_[from].size()) - 1});
  }

  // Sends as much flow as possible from s to t, cheapest paths first.
  // Returns (flow, cost). Bellman-Ford tolerates the negative residual
  // costs; shortest-path augmentation keeps the residual graph free of
  // negative cycles.
  std::pair<std::int64_t, std::int64_t> min_cost_max_flow(int s, int t) {
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    const int n = static_cast<int>(adj_.size());
    std::int64_t flow = 0;
    std::int64_t cost = 0;
    while (true) {
      std::vector<std::int64_t> dist(n, kInf);
      std::vector<int> par_node(n, -1);
      std::vector<int> par_edge(n, -1);
      dist[s] = 0;
      for (int pass = 0; pass < n; ++pass) {
        bool relaxed = false;
        for (int u = 0; u < n; ++u) {
          if (dist[u] == kInf) continue;
          for (int e = 0; e < static_cast<int>(adj_[u].size()); ++e) {
            const Edge& edge = adj_[u][e];
            if (edge.cap <= 0 || dist[u] + edge.cost >= dist[edge.to]) continue;
            dist[edge.to] = dist[u] + edge.cost;
            par_node[edge.to] = u;
            par_edge[edge.to] = e;
            relaxed = true;
          }
        }
        if (!relaxed) break;
      }
      if (dist[t] == kInf) break;
      std::int64_t push = kInf;
      for (int v = t; v != s; v = par_node[v]) {
        push = std::min(push, adj_[par_node[v]][par_edge[v]].cap);
      }
      for (int v = t; v != s; v = par_node[v]) {
        Edge& edge = adj_[par_node[v]][par_edge[v]];
        edge.cap -= push;
        adj_[edge.to][edge.rev].cap += push;
      }
      flow += push;
      cost += push * dist[t];
    }
    return {flow, cost};
  }

 private:
  std::vector<std::vector<Edge>> adj_;
};

}  // namespace

Money tp_optimal_value(const TpInstance& inst) {
  if (!balanced_check(inst)) {
    throw std::invalid_argument("total supply differs from total demand");
  }
  const int source = 0;
  const int sink = inst.p + inst.q + 1;
  FlowNetwork net(inst.p + inst.q + 2);
  for (int i = 0; i < inst.p; ++i) {
    net.add_edge(source, 1 + i, inst.supply[i], 0);
  }
  for (int j = 0; j < inst.q; ++j) {
    net.add_edge(1 + inst.p + j, sink, inst.demand[j], 0);
  }
  for (int i = 0; i < inst.p; ++i) {
    for (int j = 0; j < inst.q; ++j) {
      net.add_edge(1 + i, 1 + inst.p + j, inst.total_supply(),
                   inst.cost(i, j).scaled());
    }
  }
  const auto [flow, cost] = net.min_cost_max_flow(source, sink);
  if (flow != inst.total_supply()) {
    throw std::logic_error("flow oracle failed to ship all supply");
  }
  return Money{cost};
}

EnumResult domp_enumerate(const DompInstance& inst, Exec exec) {
  const int cap = subset_enum_cap();
  if (inst.n > cap) {
    throw EnumCapError("refusing to enumerate n=" + std::to_string(inst.n) +
                       " > cap " + std::to_string(cap) +
                       " (set MONGE_DOMP_ENUM_CAP to raise)");
  }
  const auto subsets = all_p_subsets(inst.n, inst.p);
  const auto [value, at] = min_scan<Money>(
      subsets.size(),
      [&](std::size_t i) { return ordered_median_value(inst, subsets[i]); },
      exec);
  return {value, subsets[at]};
}

}  // namespace mongedomp
