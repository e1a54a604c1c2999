#include "divnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "divnet/analytic.hpp"

namespace divnet {
namespace {

void require_limit(const SieveTables& tables, std::int64_t N) {
  if (tables.limit() < N) {
    throw std::invalid_argument("sieve limit " + std::to_string(tables.limit()) +
                                " is smaller than N=" + std::to_string(N));
  }
}

std::map<std::int64_t, std::set<ExactRational>> prime_band_values(std::int64_t N, Measure measure,
                                                                   const SieveTables& tables) {
  std::map<std::int64_t, std::set<ExactRational>> values;
  for (std::int64_t p = 2; p <= N; ++p) {
    if (!tables.is_prime(p)) continue;
    const ExactRational v = measure == Measure::degree ? ExactRational(degree(p, N, tables))
                                                       : clustering(p, N, tables).coefficient;
    values[N / p].insert(v);
  }
  return values;
}

template <typename Value>
SignStats sign_stats(const std::vector<Value>& deltas) {
  SignStats stats;
  double sum = 0.0;
  for (const Value& d : deltas) {
    int sign = 0;
    if constexpr (std::is_same_v<Value, ExactRational>) {
      sign = d.sign();
      sum += d.to_double();
    } else {
      sign = (d > 0) - (d < 0);
      sum += static_cast<double>(d);
    }
    if (sign == 0) {
      ++stats.count_zero;
    } else if (sign > 0) {
      ++stats.count_pos;
    } else {
      ++stats.count_neg;
    }
  }
  stats.mean = deltas.empty() ? 0.0 : sum / static_cast<double>(deltas.size());
  return stats;
}

}  // namespace

std::vector<BandSummary> band_decomposition(std::int64_t N, const SieveTables& tables) {
  if (N < 2) throw std::invalid_argument("band_decomposition: N must be >= 2");
  require_limit(tables, N);
  std::vector<BandSummary> bands;
  // Walk n upward; each step jumps to the end of the current band.
  for (std::int64_t n = 1; n <= N;) {
    const std::int64_t a = N / n;
    const std::int64_t hi = N / a;
    BandSummary band;
    band.a = a;
    band.lo = N / (a + 1);
    band.hi = hi;
    for (std::int64_t m = n; m <= hi; ++m) band.prime_count += tables.is_prime(m) ? 1 : 0;
    band.prime_degree = a;
    band.prime_clustering = prime_clustering(a);
    bands.push_back(band);
    n = hi + 1;
  }
  std::reverse(bands.begin(), bands.end());
  return bands;
}

std::vector<std::int64_t> geometric_sizes(std::int64_t nmin, std::int64_t nmax, int count) {
  if (nmin < 2 || nmax < nmin || count < 1) {
    throw std::invalid_argument("geometric_sizes: need 2 <= nmin <= nmax and count >= 1");
  }
  std::vector<std::int64_t> sizes;
  if (count == 1) return {nmin};
  const double ratio = std::log(static_cast<double>(nmax) / static_cast<double>(nmin));
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    sizes.push_back(std::llround(static_cast<double>(nmin) * std::exp(ratio * t)));
  }
  sizes.front() = nmin;
  sizes.back() = nmax;
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes;
}

ScalingFit scaling_fit(std::span<const std::int64_t> sizes) {
  if (sizes.size() < 3) throw std::invalid_argument("scaling_fit: need at least 3 sizes");
  std::vector<std::int64_t> sorted(sizes.begin(), sizes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("scaling_fit: repeated sizes give a degenerate fit");
  }
  if (sorted.front() < 2) throw std::invalid_argument("scaling_fit: sizes must be >= 2");

  ScalingFit fit;
  fit.sizes.assign(sizes.begin(), sizes.end());
  std::vector<double> xs;
  std::vector<double> ys;
  for (const std::int64_t N : fit.sizes) {
    const double density = link_density(N).to_double();
    fit.densities.push_back(density);
    xs.push_back(std::log(static_cast<double>(N)));
    ys.push_back(std::log(density));
  }
  const auto count = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ssr = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ssr += r * r;
  }
  fit.residual = std::sqrt(ssr / count);
  return fit;
}

double stretch_similarity(std::int64_t N1, std::int64_t N2, Measure measure,
                          const SieveTables& tables) {
  if (N1 < 2) throw std::invalid_argument("stretch_similarity: N1 must be >= 2");
  if (N1 > N2) throw std::invalid_argument("stretch_similarity: requires N1 <= N2");
  require_limit(tables, N2);
  const auto first = prime_band_values(N1, measure, tables);
  const auto second = prime_band_values(N2, measure, tables);
  std::int64_t compared = 0;
  std::int64_t identical = 0;
  for (const auto& [a, values] : first) {
    const auto it = second.find(a);
    if (it == second.end()) continue;
    ++compared;
    identical += values == it->second ? 1 : 0;
  }
  return compared == 0 ? 1.0 : static_cast<double>(identical) / static_cast<double>(compared);
}

CensusTable heathbrown_census(std::int64_t N, const SieveTables& tables) {
  if (N < 2) throw std::invalid_argument("heathbrown_census: N must be >= 2");
  require_limit(tables, N);
  CensusTable table;
  table.N = N;
  for (std::int64_t n = 1; n < N; ++n) ++table.counts[delta_divisor(n, tables)];
  return table;
}

std::vector<std::int64_t> census_members(std::int64_t N, std::int64_t k, const SieveTables& tables) {
  require_limit(tables, N);
  std::vector<std::int64_t> members;
  for (std::int64_t n = 1; n < N; ++n) {
    if (delta_divisor(n, tables) == k) members.push_back(n);
  }
  return members;
}

DeltaSymmetry delta_symmetry_stats(std::int64_t N, const SieveTables& tables, int jobs) {
  if (N < 3) throw std::invalid_argument("delta_symmetry_stats: N must be >= 3");
  require_limit(tables, N);
  const auto profile = clustering_profile(N, tables, jobs);
  std::vector<ExactRational> dc;
  std::vector<std::int64_t> ds;
  dc.reserve(static_cast<std::size_t>(N - 1));
  ds.reserve(static_cast<std::size_t>(N - 1));
  for (std::int64_t n = 1; n < N; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    dc.push_back(profile[i].coefficient - profile[i + 1].coefficient);
    ds.push_back(delta_divisor(n, tables));
  }
  return {sign_stats(dc), sign_stats(ds)};
}

}  // namespace divnet
