#pragma once

/**
 * @file numtheory.hpp
 * @brief Sieves and arithmetic-function kernels behind the closed-form measures.
 *
 * Conventions used throughout divnet:
 *  - s(n) is the number of divisors of n, including 1 and n.
 *  - d3(n) is the sum of s(m) over all divisors m of n.
 *  - D(x) is the divisor summatory function sum_{j=1..x} floor(x/j).
 */

#include <cstdint>
#include <span>
#include <vector>

namespace divnet {

/// Per-n arithmetic tables for 1..limit. Immutable once built and safe to share across threads.
class SieveTables {
 public:
  /// Builds the tables for 1..limit. Throws std::invalid_argument when limit < 1.
  explicit SieveTables(std::int64_t limit);

  [[nodiscard]] std::int64_t limit() const { return limit_; }

  /// Smallest prime factor; spf(1) == 1.
  [[nodiscard]] std::int64_t spf(std::int64_t n) const { return spf_[check(n)]; }
  /// s(n).
  [[nodiscard]] std::int64_t divisor_count(std::int64_t n) const { return count_[check(n)]; }
  /// d3(n).
  [[nodiscard]] std::int64_t divisor_count_sum(std::int64_t n) const { return count_sum_[check(n)]; }
  [[nodiscard]] bool is_prime(std::int64_t n) const { return n >= 2 && spf_[check(n)] == n; }

 private:
  [[nodiscard]] std::size_t check(std::int64_t n) const;

  std::int64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> count_sum_;
};

SieveTables build_sieve(std::int64_t limit);

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n with its prime-power factorization, primes strictly increasing. Empty factors iff n == 1.
struct FactoredInteger {
  std::int64_t n = 1;
  std::vector<PrimePower> factors;
};

/// Throws std::out_of_range unless 1 <= n <= tables.limit().
FactoredInteger factorize(std::int64_t n, const SieveTables& tables);

/// floor(numerator / n). Throws std::invalid_argument for n == 0 or a negative numerator.
std::int64_t floor_div(std::int64_t numerator, std::int64_t n);

/// D(x) in O(sqrt x) via the hyperbola split. D(0) == 0.
std::int64_t divisor_summatory(std::int64_t x);

/// All divisors of n in ascending order (exactly s(n) entries).
std::vector<std::int64_t> list_divisors(const FactoredInteger& value);

/// s(n) = prod (j_i + 1), straight from the exponents.
std::int64_t divisor_count(const FactoredInteger& value);

/// d3(n) = prod (j_i + 1)(j_i + 2) / 2, straight from the exponents.
std::int64_t divisor_count_sum(const FactoredInteger& value);

/// Integer square root: largest r with r*r <= x.
std::int64_t isqrt(std::int64_t x);

}  // namespace divnet
