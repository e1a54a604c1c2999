#include "divnet/exact_rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace divnet {
namespace {

wide_int abs128(wide_int v) { return v < 0 ? -v : v; }

wide_int gcd128(wide_int a, wide_int b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const wide_int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

std::int64_t checked_narrow(wide_int value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < -static_cast<wide_int>(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("ExactRational: value exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(value);
}

ExactRational::ExactRational(std::int64_t numerator, std::int64_t denominator) {
  *this = from_wide(numerator, denominator);
}

ExactRational ExactRational::from_wide(wide_int numerator, wide_int denominator) {
  if (denominator == 0) {
    throw std::domain_error("ExactRational: zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  ExactRational out;
  if (numerator == 0) {
    return out;
  }
  const wide_int g = gcd128(numerator, denominator);
  out.num_ = checked_narrow(numerator / g);
  out.den_ = checked_narrow(denominator / g);
  return out;
}

double ExactRational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string ExactRational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  // Cross-multiply over the gcd of the denominators to keep intermediates small.
  const wide_int g = gcd128(den_, rhs.den_);
  const wide_int left = static_cast<wide_int>(num_) * (rhs.den_ / g);
  const wide_int right = static_cast<wide_int>(rhs.num_) * (den_ / g);
  const wide_int den = static_cast<wide_int>(den_ / g) * rhs.den_;
  *this = from_wide(left + right, den);
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) { return *this += -rhs; }

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  const wide_int g1 = gcd128(num_, rhs.den_);
  const wide_int g2 = gcd128(rhs.num_, den_);
  const wide_int n1 = g1 == 0 ? 0 : num_ / g1;
  const wide_int n2 = g2 == 0 ? 0 : rhs.num_ / g2;
  const wide_int d1 = g2 == 0 ? den_ : den_ / g2;
  const wide_int d2 = g1 == 0 ? rhs.den_ : rhs.den_ / g1;
  *this = from_wide(n1 * n2, d1 * d2);
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.num_ == 0) {
    throw std::domain_error("ExactRational: division by zero");
  }
  return *this *= ExactRational::from_wide(rhs.den_, rhs.num_);
}

ExactRational ExactRational::operator-() const {
  ExactRational out = *this;
  out.num_ = -num_;
  return out;
}

std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
  const wide_int left = static_cast<wide_int>(lhs.num_) * rhs.den_;
  const wide_int right = static_cast<wide_int>(rhs.num_) * lhs.den_;
  return left <=> right;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
  return os << value.to_string();
}

}  // namespace divnet
