#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace mongedomp {

/// Raised by any Money operation whose exact result does not fit in 64 bits.
struct MoneyOverflow : std::overflow_error {
  MoneyOverflow() : std::overflow_error("money arithmetic overflow") {}
};

/// A cost amount in hundredths of a cost unit, stored exactly as a signed
/// 64-bit integer. Arithmetic is overflow-checked; there is no silent
/// wraparound anywhere in the toolkit.
class Money {
 public:
  constexpr Money() = default;
  constexpr explicit Money(std::int64_t scaled) : scaled_(scaled) {}

  /// Scaled value (hundredths of a unit).
  constexpr std::int64_t scaled() const { return scaled_; }

  friend constexpr bool operator==(Money, Money) = default;
  friend constexpr auto operator<=>(Money, Money) = default;

  friend Money operator+(Money a, Money b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.scaled_, b.scaled_, &r)) throw MoneyOverflow();
    return Money(r);
  }
  friend Money operator-(Money a, Money b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.scaled_, b.scaled_, &r)) throw MoneyOverflow();
    return Money(r);
  }
  friend Money operator-(Money a) {
    std::int64_t r;
    if (__builtin_sub_overflow(std::int64_t{0}, a.scaled_, &r)) throw MoneyOverflow();
    return Money(r);
  }
  friend Money operator*(std::int64_t k, Money a) {
    std::int64_t r;
    if (__builtin_mul_overflow(k, a.scaled_, &r)) throw MoneyOverflow();
    return Money(r);
  }
  friend Money operator*(Money a, std::int64_t k) { return k * a; }

  Money& operator+=(Money b) { return *this = *this + b; }
  Money& operator-=(Money b) { return *this = *this - b; }

  /// Fixed two-decimal rendering in original cost units, e.g. Money(-5)
  /// prints "-0.05" and Money(1000) prints "10.00".
  std::string str() const {
    std::uint64_t mag = scaled_ < 0 ? ~static_cast<std::uint64_t>(scaled_) + 1
                                    : static_cast<std::uint64_t>(scaled_);
    std::string out = scaled_ < 0 ? "-" : "";
    out += std::to_string(mag / 100);
    out += '.';
    std::uint64_t cents = mag % 100;
    out += static_cast<char>('0' + cents / 10);
    out += static_cast<char>('0' + cents % 10);
    return out;
  }

 private:
  std::int64_t scaled_ = 0;
};

inline constexpr Money kMoneyMax{std::numeric_limits<std::int64_t>::max()};
inline constexpr Money kMoneyMin{std::numeric_limits<std::int64_t>::min()};

}  // namespace mongedomp
