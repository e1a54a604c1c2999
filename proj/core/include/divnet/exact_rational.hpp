#pragma once

/**
 * @file exact_rational.hpp
 * @brief Reduced fraction over 64-bit integers with overflow-checked arithmetic.
 *
 * Every network measure in divnet (clustering, link density, betweenness,
 * consecutive differences) is carried as an ExactRational so that the
 * closed-form and graph paths can be compared with plain equality.
 *
 * - Always reduced: gcd(|num|, den) == 1 and den >= 1.
 * - Zero is uniquely 0/1.
 * - Intermediates are computed in 128 bits; a result that does not fit in
 *   int64 throws std::overflow_error instead of wrapping.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace divnet {

/// 128-bit signed integer used for overflow-free intermediates.
__extension__ typedef __int128 wide_int;

class ExactRational {
 public:
  constexpr ExactRational() = default;
  constexpr ExactRational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by intent
  ExactRational(std::int64_t numerator, std::int64_t denominator);

  [[nodiscard]] constexpr std::int64_t numerator() const { return num_; }
  [[nodiscard]] constexpr std::int64_t denominator() const { return den_; }
  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

  [[nodiscard]] double to_double() const;
  /// Always "p/q", including "0/1" and "3/1".
  [[nodiscard]] std::string to_string() const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const;

  friend constexpr bool operator==(const ExactRational&, const ExactRational&) = default;
  friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs);

 private:
  static ExactRational from_wide(wide_int numerator, wide_int denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

/// Narrow a 128-bit intermediate to int64, throwing std::overflow_error when it does not fit.
std::int64_t checked_narrow(wide_int value);

}  // namespace divnet
