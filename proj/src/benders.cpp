#include "mongedomp/benders.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mongedomp/oracles.hpp"

namespace mongedomp {

namespace {

std::int64_t delta_lambda(const std::vector<std::int64_t>& lambda, int k) {
  return lambda[k] - (k > 0 ? lambda[k - 1] : 0);
}

std::vector<std::int64_t> inclusive_prefix(const std::vector<std::int64_t>& x) {
  std::vector<std::int64_t> out(x.size());
  std::partial_sum(x.begin(), x.end(), out.begin());
  return out;
}

}  // namespace

void validate_encoding(const StaircaseEncoding& enc, int n, int g) {
  const auto& f = enc.f;
  if (enc.orientation == Orientation::kB1) {
    if (static_cast<int>(f.size()) != n) {
      throw std::invalid_argument("position encoding must have n entries");
    }
    if (f[0] != 0) {
      throw std::invalid_argument("position encoding must start at rung 0");
    }
    for (int l = 0; l < n; ++l) {
      if (f[l] < 0 || f[l] > g || (l > 0 && f[l] < f[l - 1])) {
        throw std::invalid_argument("position encoding must be monotone into [0, g]");
      }
    }
  } else {
    if (static_cast<int>(f.size()) != g) {
      throw std::invalid_argument("rung encoding must have g entries");
    }
    for (int h = 0; h < g; ++h) {
      if (f[h] < 1 || f[h] > n || (h > 0 && f[h] < f[h - 1])) {
        throw std::invalid_argument("rung encoding must be monotone into [1, n]");
      }
    }
  }
}

DualPair duals_b1(const DompInstance& inst, const CostLadder& ladder,
                  const StaircaseEncoding& enc) {
  if (enc.orientation != Orientation::kB1) {
    throw std::invalid_argument("expected a position-to-rung encoding");
  }
  validate_encoding(enc, inst.n, ladder.g());
  const auto& lam = inst.lambda;
  DualPair d;
  d.u.assign(inst.n, Money{0});
  d.v.assign(ladder.g() + 1, Money{0});
  for (int l = 1; l < inst.n; ++l) {
    d.u[l] = d.u[l - 1] + ladder.value(enc.f[l]) * (lam[l] - lam[l - 1]);
  }
  for (int h = 0; h <= ladder.g(); ++h) {
    Money vh{0};
    for (int k = 0; k < inst.n; ++k) {
      if (enc.f[k] < h) {
        vh += (ladder.value(h) - ladder.value(enc.f[k])) * delta_lambda(lam, k);
      }
    }
    d.v[h] = vh;
  }
  return d;
}

DualPair duals_b2(const DompInstance& inst, const CostLadder& ladder,
                  const StaircaseEncoding& enc) {
  if (enc.orientation != Orientation::kB2) {
    throw std::invalid_argument("expected a rung-to-position encoding");
  }
  const int g = ladder.g();
  validate_encoding(enc, inst.n, g);
  const auto& lam = inst.lambda;
  DualPair d;
  d.u.assign(inst.n, Money{0});
  d.v.assign(g + 1, Money{0});
  for (int h = 1; h <= g; ++h) {
    d.v[h] =
        d.v[h - 1] + (ladder.value(h) - ladder.value(h - 1)) * lam[enc.f[h - 1] - 1];
  }
  for (int l = 0; l < inst.n; ++l) {
    Money ul{0};
    for (int k = 0; k < g; ++k) {
      if (enc.f[k] <= l) {  // 1-based f(k) < 1-based position l+1
        ul += (ladder.value(k + 1) - ladder.value(k)) * (lam[l] - lam[enc.f[k] - 1]);
      }
    }
    d.u[l] = ul;
  }
  return d;
}

Money BendersCut::rhs(const std::vector<std::int64_t>& xbar) const {
  if (xbar.size() != rung_coeff.size()) {
    throw std::invalid_argument("histogram and cut disagree on rung count");
  }
  Money out = constant;
  for (std::size_t h = 0; h < xbar.size(); ++h) out += rung_coeff[h] * xbar[h];
  return out;
}

Money model_coefficient(const BendersCut& cut, const CostLadder& ladder,
                        Money cost_ij) {
  return cut.rung_coeff.at(ladder.rank(cost_ij));
}

BendersCut cut_from_encoding(const DompInstance& inst, const CostLadder& ladder,
                             const StaircaseEncoding& enc) {
  const DualPair d = enc.orientation == Orientation::kB1
                         ? duals_b1(inst, ladder, enc)
                         : duals_b2(inst, ladder, enc);
  BendersCut cut;
  cut.encoding = enc;
  cut.rung_coeff = d.v;
  for (const Money ul : d.u) cut.constant += ul;
  return cut;
}

Money cut_rhs_closed_form(const DompInstance& inst, const CostLadder& ladder,
                          const StaircaseEncoding& enc,
                          const std::vector<int>& open) {
  validate_encoding(enc, inst.n, ladder.g());
  const auto alloc = closest_assignment(inst, open).cost;
  Money total{0};
  if (enc.orientation == Orientation::kB1) {
    for (int k = 0; k < inst.n; ++k) {
      const Money t = ladder.value(enc.f[k]);
      Money inner = t * static_cast<std::int64_t>(inst.n - k);
      for (const Money c : alloc) {
        if (c > t) inner += c - t;
      }
      total += inner * delta_lambda(inst.lambda, k);
    }
    return total;
  }
  for (int k = 0; k < ladder.g(); ++k) {
    const int pos = enc.f[k];  // 1-based
    const std::int64_t lam_f = inst.lambda[pos - 1];
    std::int64_t inner = 0;
    for (int l = pos; l < inst.n; ++l) inner += inst.lambda[l] - lam_f;
    for (const Money c : alloc) {
      if (c > ladder.value(k)) inner += lam_f;
    }
    total += (ladder.value(k + 1) - ladder.value(k)) * inner;
  }
  return total;
}

StaircaseEncoding encoding_from_histogram(const std::vector<std::int64_t>& xbar,
                                          int n, Orientation orientation) {
  if (xbar.empty()) {
    throw std::invalid_argument("histogram must have at least one rung");
  }
  for (const std::int64_t x : xbar) {
    if (x < 0) throw std::invalid_argument("histogram entries must be non-negative");
  }
  const int g = static_cast<int>(xbar.size()) - 1;
  const auto pre = inclusive_prefix(xbar);
  if (pre.back() != n) {
    throw std::invalid_argument("histogram must sum to n");
  }
  StaircaseEncoding enc{orientation, {}};
  if (orientation == Orientation::kB1) {
    enc.f.assign(n, 0);
    int h = 0;
    for (int l = 1; l < n; ++l) {
      while (pre[h] < l) ++h;  // terminates: pre[g] == n
      enc.f[l] = h;
    }
  } else {
    enc.f.assign(g, 1);
    for (int h = 0; h < g; ++h) {
      enc.f[h] = static_cast<int>(std::min<std::int64_t>(1 + pre[h], n));
    }
  }
  return enc;
}

StaircaseEncoding convert_encoding(const StaircaseEncoding& enc, int n, int g) {
  validate_encoding(enc, n, g);
  if (enc.orientation == Orientation::kB1) {
    StaircaseEncoding out{Orientation::kB2, std::vector<int>(g, 0)};
    int l = 0;
    for (int h = 0; h < g; ++h) {
      while (l < n && enc.f[l] <= h) ++l;
      out.f[h] = l;  // count of positions at rung <= h, i.e. the last one
    }
    return out;
  }
  StaircaseEncoding out{Orientation::kB1, std::vector<int>(n, 0)};
  int h = 0;
  for (int l = 1; l < n; ++l) {
    while (h < g && enc.f[h] < l + 1) ++h;
    out.f[l] = h;  // g when no rung reaches this position
  }
  return out;
}

std::uint64_t encoding_count(int n, int g) {
  return binomial(n + g - 1, n - 1);
}

std::vector<StaircaseEncoding> enumerate_encodings(int n, int g,
                                                   Orientation orientation,
                                                   std::uint64_t cap) {
  std::uint64_t count = 0;
  try {
    count = encoding_count(n, g);
  } catch (const std::overflow_error&) {
    throw std::length_error("encoding family exceeds the enumeration cap");
  }
  if (count > cap) {
    throw std::length_error("encoding family of size " + std::to_string(count) +
                            " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::vector<StaircaseEncoding> out;
  out.reserve(count);
  if (orientation == Orientation::kB1) {
    std::vector<int> f(n, 0);
    while (true) {
      out.push_back({orientation, f});
      int i = n - 1;
      while (i >= 1 && f[i] == g) --i;
      if (i < 1) break;
      ++f[i];
      for (int t = i + 1; t < n; ++t) f[t] = f[i];
    }
  } else {
    std::vector<int> f(g, 1);
    while (true) {
      out.push_back({orientation, f});
      int i = g - 1;
      while (i >= 0 && f[i] == n) --i;
      if (i < 0) break;
      ++f[i];
      for (int t = i + 1; t < g; ++t) f[t] = f[i];
    }
  }
  return out;
}

bool cutsets_equal(const DompInstance& inst, const CostLadder& ladder,
                   std::uint64_t cap) {
  const auto key = [](const BendersCut& cut) {
    std::vector<std::int64_t> k;
    k.reserve(cut.rung_coeff.size() + 1);
    k.push_back(cut.constant.scaled());
    for (const Money m : cut.rung_coeff) k.push_back(m.scaled());
    return k;
  };
  std::vector<std::vector<std::int64_t>> a;
  std::vector<std::vector<std::int64_t>> b;
  for (const auto& enc :
       enumerate_encodings(inst.n, ladder.g(), Orientation::kB1, cap)) {
    a.push_back(key(cut_from_encoding(inst, ladder, enc)));
  }
  for (const auto& enc :
       enumerate_encodings(inst.n, ladder.g(), Orientation::kB2, cap)) {
    b.push_back(key(cut_from_encoding(inst, ladder, enc)));
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Separation separate(const DompInstance& inst, const CostLadder& ladder,
                    const std::vector<std::int64_t>& xbar, Money theta_bar,
                    Money epsilon, Orientation orientation) {
  if (static_cast<int>(xbar.size()) != ladder.g() + 1) {
    throw std::invalid_argument("histogram must have g+1 entries");
  }
  Separation s;
  s.cut = cut_from_encoding(
      inst, ladder, encoding_from_histogram(xbar, inst.n, orientation));
  s.rhs = s.cut.rhs(xbar);
  s.violated = theta_bar < s.rhs - epsilon;
  return s;
}

BendersLog solve_benders(const DompInstance& inst, Orientation orientation,
                         const SolveLimits& limits, Exec exec) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  const int cap = subset_enum_cap();
  if (inst.n > cap) {
    throw EnumCapError("refusing to enumerate n=" + std::to_string(inst.n) +
                       " > cap " + std::to_string(cap) +
                       " (set MONGE_DOMP_ENUM_CAP to raise)");
  }
  const CostLadder ladder(inst.cost);
  const auto subsets = all_p_subsets(inst.n, inst.p);
  const std::size_t m = subsets.size();

  // Rung ranks of every subset's allocation costs; a cut evaluates on a
  // subset by summing its v entries over these ranks.
  std::vector<std::vector<int>> ranks(m);
#ifdef _OPENMP
#pragma omp parallel for if (exec == Exec::kParallel) schedule(static)
#endif
  for (long long s = 0; s < static_cast<long long>(m); ++s) {
    const auto alloc = closest_assignment(inst, subsets[s]).cost;
    std::vector<int> r;
    r.reserve(alloc.size());
    for (const Money c : alloc) r.push_back(ladder.rank(c));
    ranks[s] = std::move(r);
  }

  std::vector<Money> master(m, theta_lower_bound(inst));

  BendersLog log;
  std::int64_t sep_ns = 0;
  const auto elapsed_ms = [&t0] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 t0)
        .count();
  };

  bool have_incumbent = false;
  while (true) {
    ++log.iterations;
    const auto [theta, at] = min_scan<Money>(
        m, [&master](std::size_t i) { return master[i]; }, exec);
    log.bound = theta;
    const std::vector<int>& open = subsets[at];
    const Money val = ordered_median_value(inst, open);
    if (!have_incumbent || val < log.incumbent) {
      have_incumbent = true;
      log.incumbent = val;
      log.best_open = open;
    }
    log.bound_trace.push_back(log.bound);
    log.incumbent_trace.push_back(log.incumbent);

    const auto sep0 = Clock::now();
    std::vector<std::int64_t> xbar(ladder.g() + 1, 0);
    for (const int h : ranks[at]) ++xbar[h];
    const Separation sep =
        separate(inst, ladder, xbar, theta, limits.epsilon, orientation);
    sep_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                                   sep0)
                  .count();
    if (!sep.violated) {
      log.converged = true;
      break;
    }
    log.cuts.push_back(sep.cut);
    log.cut_origins.push_back(open);
    const BendersCut& cut = log.cuts.back();
#ifdef _OPENMP
#pragma omp parallel for if (exec == Exec::kParallel) schedule(static)
#endif
    for (long long s = 0; s < static_cast<long long>(m); ++s) {
      Money rhs = cut.constant;
      for (const int h : ranks[s]) rhs += cut.rung_coeff[h];
      master[s] = std::max(master[s], rhs);
    }

    if (limits.max_iterations != 0 && log.iterations >= limits.max_iterations) {
      break;
    }
    if (limits.time_limit_ms != 0 && elapsed_ms() >= limits.time_limit_ms) {
      break;
    }
  }

  log.gap = log.incumbent - log.bound;
  log.wall_time_ms = elapsed_ms();
  log.separation_time_ms = sep_ns / 1000000;
  return log;
}

}  // namespace mongedomp
