#pragma once

/**
 * @file analysis.hpp
 * @brief Pattern studies over the closed-form measures: floor bands, link-density
 * scaling, stretching similarity, the s(n) = s(n+1) + k census and sign balance
 * of consecutive differences.
 */

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "divnet/exact_rational.hpp"
#include "divnet/numtheory.hpp"

namespace divnet {

/// One floor band (lo, hi] on which floor(N/n) == a.
struct BandSummary {
  std::int64_t a = 0;
  std::int64_t lo = 0;  ///< exclusive, floor(N/(a+1))
  std::int64_t hi = 0;  ///< inclusive, floor(N/a)
  std::int64_t prime_count = 0;
  std::int64_t prime_degree = 0;  ///< every prime in the band has degree a
  ExactRational prime_clustering;
};

/// Bands ordered by increasing a (the top band (N/2, N] first). Requires N >= 2 and
/// tables.limit() >= N. At most 2*floor(sqrt N) entries.
std::vector<BandSummary> band_decomposition(std::int64_t N, const SieveTables& tables);

struct ScalingFit {
  std::vector<std::int64_t> sizes;
  std::vector<double> densities;
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  ///< RMS of the log-space residuals
};

/// Least-squares line through (log N, log LD(N)) using the O(sqrt N) density.
/// Throws std::invalid_argument for fewer than 3 sizes, a size below 2 or repeated sizes.
ScalingFit scaling_fit(std::span<const std::int64_t> sizes);

/// `count` sizes spaced geometrically from nmin to nmax (rounded, deduplicated).
std::vector<std::int64_t> geometric_sizes(std::int64_t nmin, std::int64_t nmax, int count);

enum class Measure { degree, clustering };

/// Fraction of floor bands, among those holding at least one prime in both G_N1 and G_N2,
/// whose set of measure values attained by prime nodes is identical in both networks.
/// Requires 2 <= N1 <= N2 <= tables.limit(); N1 > N2 throws std::invalid_argument.
double stretch_similarity(std::int64_t N1, std::int64_t N2, Measure measure,
                          const SieveTables& tables);

struct CensusTable {
  std::int64_t N = 0;
  std::map<std::int64_t, std::int64_t> counts;  ///< k -> #{1 <= n < N : s(n) = s(n+1) + k}
};

CensusTable heathbrown_census(std::int64_t N, const SieveTables& tables);

/// The n < N with s(n) = s(n+1) + k, ascending.
std::vector<std::int64_t> census_members(std::int64_t N, std::int64_t k, const SieveTables& tables);

struct SignStats {
  std::int64_t count_zero = 0;
  std::int64_t count_pos = 0;
  std::int64_t count_neg = 0;
  double mean = 0.0;
};

struct DeltaSymmetry {
  SignStats clustering;  ///< over c_n - c_{n+1}, n = 1..N-1
  SignStats divisor;     ///< over s(n) - s(n+1), n = 1..N-1
};

/// Requires N >= 3.
DeltaSymmetry delta_symmetry_stats(std::int64_t N, const SieveTables& tables, int jobs = 1);

}  // namespace divnet
