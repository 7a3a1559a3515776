#include <cstdint>
#include <limits>

#include "doctest.h"
#include "mongedomp/money.hpp"
#include "mongedomp/rng.hpp"

using mongedomp::kMoneyMax;
using mongedomp::kMoneyMin;
using mongedomp::Money;
using mongedomp::MoneyOverflow;
using mongedomp::SplitMix64;

TEST_CASE("construction and ordering") {
  CHECK(Money{} == Money{0});
  CHECK(Money{3} + Money{4} == Money{7});
  CHECK(Money{3} < Money{4});
  CHECK(Money{-1} < Money{0});
  CHECK(Money{250}.scaled() == 250);
}

TEST_CASE("two-decimal rendering") {
  CHECK(Money{0}.str() == "0.00");
  CHECK(Money{-5}.str() == "-0.05");
  CHECK(Money{1000}.str() == "10.00");
  CHECK(Money{-100}.str() == "-1.00");
  CHECK(Money{123456}.str() == "1234.56");
  CHECK(Money{-123456}.str() == "-1234.56");
  CHECK(Money{7}.str() == "0.07");
  // The minimum is the one value whose magnitude does not negate in 64 bits;
  // str must still render it.
  CHECK(kMoneyMin.str() == "-92233720368547758.08");
  CHECK(kMoneyMax.str() == "92233720368547758.07");
}

TEST_CASE("exact arithmetic") {
  CHECK(Money{5} - Money{8} == Money{-3});
  CHECK(-Money{5} == Money{-5});
  CHECK(3 * Money{40} == Money{120});
  CHECK(Money{40} * -2 == Money{-80});
  Money acc{10};
  acc += Money{5};
  acc -= Money{20};
  CHECK(acc == Money{-5});
}

TEST_CASE("overflow is an error, not a wrap") {
  CHECK_THROWS_AS(kMoneyMax + Money{1}, MoneyOverflow);
  CHECK_THROWS_AS(kMoneyMin - Money{1}, MoneyOverflow);
  CHECK_THROWS_AS(-kMoneyMin, MoneyOverflow);
  CHECK_THROWS_AS(2 * kMoneyMax, MoneyOverflow);
  CHECK_THROWS_AS(kMoneyMin * -1, MoneyOverflow);
  CHECK_NOTHROW(kMoneyMax + Money{0});
  CHECK_NOTHROW(-kMoneyMax);
}

TEST_CASE("additive round trips") {
  SplitMix64 rng{7};
  for (int t = 0; t < 1000; ++t) {
    const auto a = static_cast<std::int64_t>(rng.next()) / 4;
    const auto b = static_cast<std::int64_t>(rng.next()) / 4;
    const Money sum = Money{a} + Money{b};
    CHECK(sum - Money{b} == Money{a});
    CHECK(sum.scaled() == a + b);
  }
}
