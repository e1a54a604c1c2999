#pragma once

/**
 * @file analytic.hpp
 * @brief Closed-form network measures of the divisibility network G_N.
 *
 * Nothing in this header builds a graph. Every value is a function of the
 * floor quotient M(n) = floor(N/n), the divisor count s(n), the divisor-count
 * sum d3(n) and the divisor summatory function D(x).
 *
 * All functions require tables.limit() >= N and throw std::out_of_range for
 * node ids outside [1, N].
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "divnet/exact_rational.hpp"
#include "divnet/numtheory.hpp"

namespace divnet {

/// k_n = floor(N/n) + s(n) - 2. Equals floor(N/p) for primes and N-1 for n = 1.
std::int64_t degree(std::int64_t n, std::int64_t N, const SieveTables& tables);

/// (n, k_n) for n = 1..N, ordered by n.
std::vector<std::pair<std::int64_t, std::int64_t>> degree_profile(std::int64_t N,
                                                                  const SieveTables& tables,
                                                                  int jobs = 1);

/// Edges of G_N over C(N,2), as the single fraction (D(N) - N) / C(N,2). Requires N >= 2.
ExactRational link_density(std::int64_t N);

/// The same density written as sum floor(N/i) / C(N,2) - 2/(N-1). Requires N >= 2.
ExactRational link_density_two_term(std::int64_t N);

/// Decomposition of the edges among the neighbours of n.
struct ClusteringParts {
  std::int64_t n = 0;
  std::int64_t divisor_links = 0;   ///< edges among the proper divisors of n
  std::int64_t multiple_links = 0;  ///< edges among the proper multiples of n (<= N)
  std::int64_t cross_links = 0;     ///< proper divisor to proper multiple edges
  std::int64_t neighbor_links = 0;  ///< e_n, the sum of the three above
  std::int64_t degree = 0;          ///< k_n
  ExactRational coefficient;        ///< e_n / C(k_n, 2); 0 when k_n < 2
};

ClusteringParts clustering(std::int64_t n, std::int64_t N, const SieveTables& tables);

/// clustering(n) for n = 1..N, ordered by n.
std::vector<ClusteringParts> clustering_profile(std::int64_t N, const SieveTables& tables,
                                                int jobs = 1);

/// Clustering of a prime whose floor quotient is a: sum_{j=2..a} floor(a/j) / C(a,2).
/// Returns 0 for a = 1; throws std::invalid_argument for a < 1.
ExactRational prime_clustering(std::int64_t a);

/// c_n - c_{n+1}. Requires 1 <= n < N.
ExactRational delta_clustering(std::int64_t n, std::int64_t N, const SieveTables& tables);

/// c_n - c_{n+1} for a pair inside one floor band (shared M = a), evaluated from the
/// exponents of n and n+1 and the band constant only. Throws std::invalid_argument for
/// pairs that straddle a band boundary.
ExactRational delta_clustering_in_band(std::int64_t n, std::int64_t N, const SieveTables& tables);

/// For an in-band pair: s(n) == s(n+1) && d3(n) == d3(n+1). Cross-band pairs throw
/// std::invalid_argument.
bool delta_zero_predicate(std::int64_t n, std::int64_t N, const SieveTables& tables);

/// s(n) - s(n+1). Requires n + 1 <= tables.limit().
std::int64_t delta_divisor(std::int64_t n, const SieveTables& tables);

/// True iff n and n+1 have the same floor quotient floor(N/n).
bool same_band(std::int64_t n, std::int64_t N);

}  // namespace divnet
