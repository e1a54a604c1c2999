#include "divnet/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "divnet/exact_rational.hpp"

namespace divnet {

SieveTables::SieveTables(std::int64_t limit) : limit_(limit) {
  if (limit < 1) {
    throw std::invalid_argument("sieve limit must be >= 1, got " + std::to_string(limit));
  }
  if (limit > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw std::invalid_argument("sieve limit too large: " + std::to_string(limit));
  }
  const auto size = static_cast<std::size_t>(limit) + 1;
  spf_.assign(size, 0);
  count_.assign(size, 0);
  count_sum_.assign(size, 0);
  // Exponent of spf(n) in n; only needed while sieving.
  std::vector<std::uint8_t> spf_exponent(size, 0);
  std::vector<std::uint32_t> primes;

  spf_[1] = 1;
  count_[1] = 1;
  for (std::size_t i = 2; i < size; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      count_[i] = 2;
      spf_exponent[i] = 1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (const std::uint32_t p : primes) {
      const std::size_t m = i * p;
      if (p > spf_[i] || m >= size) {
        break;
      }
      spf_[m] = p;
      if (p == spf_[i]) {
        const unsigned e = spf_exponent[i];
        spf_exponent[m] = static_cast<std::uint8_t>(e + 1);
        count_[m] = count_[i] / (e + 1) * (e + 2);
      } else {
        spf_exponent[m] = 1;
        count_[m] = count_[i] * 2;
      }
    }
  }

  for (std::size_t d = 1; d < size; ++d) {
    const std::uint32_t add = count_[d];
    for (std::size_t m = d; m < size; m += d) {
      if (count_sum_[m] > std::numeric_limits<std::uint32_t>::max() - add) {
        throw std::overflow_error("d3 table overflow at n=" + std::to_string(m));
      }
      count_sum_[m] += add;
    }
  }
}

std::size_t SieveTables::check(std::int64_t n) const {
  if (n < 1 || n > limit_) {
    throw std::out_of_range("n=" + std::to_string(n) + " outside sieve range [1, " +
                            std::to_string(limit_) + "]");
  }
  return static_cast<std::size_t>(n);
}

SieveTables build_sieve(std::int64_t limit) { return SieveTables(limit); }

FactoredInteger factorize(std::int64_t n, const SieveTables& tables) {
  FactoredInteger out;
  out.n = n;
  std::int64_t rest = n;
  static_cast<void>(tables.spf(n));  // range check
  while (rest > 1) {
    const std::int64_t p = tables.spf(rest);
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  return out;
}

std::int64_t floor_div(std::int64_t numerator, std::int64_t n) {
  if (n <= 0) {
    throw std::invalid_argument("floor_div: divisor must be positive");
  }
  if (numerator < 0) {
    throw std::invalid_argument("floor_div: numerator must be nonnegative");
  }
  return numerator / n;
}

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) {
    throw std::invalid_argument("isqrt of negative value");
  }
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && static_cast<wide_int>(r) * r > x) --r;
  while (static_cast<wide_int>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::int64_t divisor_summatory(std::int64_t x) {
  if (x < 0) {
    throw std::invalid_argument("divisor_summatory: x must be nonnegative");
  }
  const std::int64_t root = isqrt(x);
  wide_int sum = 0;
  for (std::int64_t j = 1; j <= root; ++j) {
    sum += x / j;
  }
  return checked_narrow(2 * sum - static_cast<wide_int>(root) * root);
}

std::vector<std::int64_t> list_divisors(const FactoredInteger& value) {
  std::vector<std::int64_t> divisors{1};
  for (const auto& [p, e] : value.factors) {
    const std::size_t base = divisors.size();
    std::int64_t power = 1;
    for (int k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) {
        divisors.push_back(divisors[i] * power);
      }
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::int64_t divisor_count(const FactoredInteger& value) {
  std::int64_t product = 1;
  for (const auto& f : value.factors) product *= f.exponent + 1;
  return product;
}

std::int64_t divisor_count_sum(const FactoredInteger& value) {
  std::int64_t product = 1;
  for (const auto& f : value.factors) {
    product *= static_cast<std::int64_t>(f.exponent + 1) * (f.exponent + 2) / 2;
  }
  return product;
}

}  // namespace divnet
