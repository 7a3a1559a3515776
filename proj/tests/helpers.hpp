// Shared generators and brute-force oracles for the test suites. Everything
// here is deliberately independent of the code under test: the Monge
// generator builds matrices from first principles (additive part plus a
// cumulative nonnegative bump), and the checkers spell definitions out
// rather than reusing library shortcuts.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "mongedomp/domp.hpp"
#include "mongedomp/matrix.hpp"
#include "mongedomp/money.hpp"
#include "mongedomp/rng.hpp"
#include "mongedomp/tp.hpp"

namespace mdtest {

using mongedomp::DompInstance;
using mongedomp::Matrix;
using mongedomp::Money;
using mongedomp::MoneyMatrix;
using mongedomp::SplitMix64;
using mongedomp::TpInstance;

// Full quadruple Monge test, all i < i' and j < j', no adjacency shortcut.
inline bool monge_by_definition(const MoneyMatrix& c) {
  for (int i = 0; i < c.rows(); ++i)
    for (int i2 = i + 1; i2 < c.rows(); ++i2)
      for (int j = 0; j < c.cols(); ++j)
        for (int j2 = j + 1; j2 < c.cols(); ++j2)
          if (c(i, j).scaled() + c(i2, j2).scaled() >
              c(i, j2).scaled() + c(i2, j).scaled())
            return false;
  return true;
}

// Monge matrix with offset rows/columns plus a cumulative bump:
//   c(i, j) = a_i + b_j + sum_{k <= i, l >= j} m(k, l),  m >= 0.
// Entries may be made negative via shift to exercise signed paths.
inline MoneyMatrix random_monge_matrix(SplitMix64& rng, int p, int q,
                                       std::int64_t shift = 0) {
  std::vector<std::int64_t> a(p), b(q);
  for (auto& x : a) x = static_cast<std::int64_t>(rng.next_below(50));
  for (auto& x : b) x = static_cast<std::int64_t>(rng.next_below(50));
  Matrix<std::int64_t> m(p, q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      m(i, j) = static_cast<std::int64_t>(rng.next_below(7));
  MoneyMatrix c(p, q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      std::int64_t bump = 0;
      for (int k = 0; k <= i; ++k)
        for (int l = j; l < q; ++l) bump += m(k, l);
      c(i, j) = Money{a[i] + b[j] + bump - shift};
    }
  return c;
}

// Supplies 1..max_unit; demands split the same total uniformly (interior
// zeros allowed, the last column takes the rest).
inline void random_balance(SplitMix64& rng, int p, int q, std::int64_t max_unit,
                           std::vector<std::int64_t>& s,
                           std::vector<std::int64_t>& d) {
  s.assign(p, 0);
  d.assign(q, 0);
  std::int64_t total = 0;
  for (auto& x : s) {
    x = 1 + static_cast<std::int64_t>(rng.next_below(max_unit));
    total += x;
  }
  std::int64_t left = total;
  for (int j = 0; j + 1 < q; ++j) {
    d[j] = left > 0 ? static_cast<std::int64_t>(rng.next_below(left)) : 0;
    left -= d[j];
  }
  d[q - 1] = left;
}

inline TpInstance random_monge_tp(SplitMix64& rng, int max_dim,
                                  std::int64_t max_unit,
                                  std::int64_t shift = 0) {
  const int p = 1 + static_cast<int>(rng.next_below(max_dim));
  const int q = 1 + static_cast<int>(rng.next_below(max_dim));
  std::vector<std::int64_t> s, d;
  random_balance(rng, p, q, max_unit, s, d);
  return TpInstance(s, d, random_monge_matrix(rng, p, q, shift));
}

// Arbitrary balanced instance, costs not Monge in general.
inline TpInstance random_tp(SplitMix64& rng, int max_dim,
                            std::int64_t max_unit) {
  const int p = 1 + static_cast<int>(rng.next_below(max_dim));
  const int q = 1 + static_cast<int>(rng.next_below(max_dim));
  std::vector<std::int64_t> s, d;
  random_balance(rng, p, q, max_unit, s, d);
  MoneyMatrix c(p, q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      c(i, j) = Money{static_cast<std::int64_t>(rng.next_below(100))};
  return TpInstance(s, d, c);
}

// DOMP instance whose cost values sit on a small ladder: entries are drawn
// from {100, 200, ..., 100 * max_g}, so g <= max_g. Weights are random
// integers in [-n, n], sorted non-increasingly.
inline DompInstance random_coarse_domp(SplitMix64& rng, int max_n, int max_g) {
  const int n = 2 + static_cast<int>(rng.next_below(std::max(1, max_n - 1)));
  const int p = 1 + static_cast<int>(rng.next_below(n));
  MoneyMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c(i, j) = Money{100 * (1 + static_cast<std::int64_t>(rng.next_below(
                                     std::max(1, max_g))))};
  std::vector<std::int64_t> lambda(n);
  for (auto& l : lambda)
    l = static_cast<std::int64_t>(rng.next_below(2 * n + 1)) - n;
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return DompInstance(n, p, c, lambda);
}

// Uniform random p-subset of {0, ..., n-1}, sorted.
inline std::vector<int> random_subset(SplitMix64& rng, int n, int p) {
  std::vector<int> sites(n);
  for (int i = 0; i < n; ++i) sites[i] = i;
  for (int i = 0; i < p; ++i)
    std::swap(sites[i], sites[i + rng.next_below(n - i)]);
  std::vector<int> open(sites.begin(), sites.begin() + p);
  std::sort(open.begin(), open.end());
  return open;
}

inline std::vector<Money> money_row(std::initializer_list<std::int64_t> xs) {
  std::vector<Money> out;
  for (std::int64_t x : xs) out.push_back(Money{x});
  return out;
}

inline MoneyMatrix money_matrix(int rows, int cols,
                                std::initializer_list<std::int64_t> xs) {
  std::vector<Money> data;
  for (std::int64_t x : xs) data.push_back(Money{x});
  return MoneyMatrix(rows, cols, std::move(data));
}

}  // namespace mdtest
