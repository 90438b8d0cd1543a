// Copyright (c) 2026 dyonmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef DYONMAP_HALF_INT_HPP
#define DYONMAP_HALF_INT_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dyonmap {

/// Exact half-integer. Stores twice the value, so 13/2 has twice() == 13.
/// Addition and subtraction are closed and lossless; conversion to double is
/// exact for |twice()| < 2^52.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t whole) : twice_(2 * whole) {}  // NOLINT(implicit)

  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_nonneg_integer() const { return twice_ >= 0 && twice_ % 2 == 0; }

  constexpr std::int64_t as_integer() const {
    if (!is_integer()) throw std::domain_error("HalfInt: " + std::to_string(twice_) + "/2 is not an integer");
    return twice_ / 2;
  }

  constexpr double value() const { return 0.5 * static_cast<double>(twice_); }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  /// Parses "7", "-3", "13/2", "-1/2". Denominator must be 1 or 2.
  static HalfInt parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        return HalfInt(std::stoll(text));
      }
      const std::int64_t num = std::stoll(text.substr(0, slash));
      const std::int64_t den = std::stoll(text.substr(slash + 1));
      if (den == 1) return HalfInt(num);
      if (den == 2) return from_twice(num);
    } catch (const std::logic_error&) {
    }
    throw std::invalid_argument("not a half-integer: '" + text + "'");
  }

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  std::int64_t twice_ = 0;
};

constexpr HalfInt half_one() { return HalfInt::from_twice(1); }

}  // namespace dyonmap

#endif
