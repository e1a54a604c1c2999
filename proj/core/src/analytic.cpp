#include "divnet/analytic.hpp"

#include <stdexcept>
#include <string>

#include "divnet/parallel.hpp"

namespace divnet {
namespace {

void require_node(std::int64_t n, std::int64_t N, const SieveTables& tables) {
  if (n < 1 || n > N) {
    throw std::out_of_range("node " + std::to_string(n) + " outside [1, " + std::to_string(N) +
                            "]");
  }
  if (tables.limit() < N) {
    throw std::invalid_argument("sieve limit " + std::to_string(tables.limit()) +
                                " is smaller than N=" + std::to_string(N));
  }
}

std::int64_t choose2(std::int64_t k) { return checked_narrow(static_cast<wide_int>(k) * (k - 1) / 2); }

ExactRational ratio_over_pairs(std::int64_t links, std::int64_t k) {
  if (k < 2) return ExactRational{};
  return ExactRational(links, choose2(k));
}

// e_n for a node with divisor count s, divisor-count sum d3 and floor quotient M.
std::int64_t neighbor_links(std::int64_t s, std::int64_t d3, std::int64_t M) {
  const wide_int total = static_cast<wide_int>(d3) - 2 * s + 1 + (divisor_summatory(M) - M) +
                         static_cast<wide_int>(M - 1) * (s - 2);
  return checked_narrow(total);
}

}  // namespace

std::int64_t degree(std::int64_t n, std::int64_t N, const SieveTables& tables) {
  require_node(n, N, tables);
  return N / n + tables.divisor_count(n) - 2;
}

std::vector<std::pair<std::int64_t, std::int64_t>> degree_profile(std::int64_t N,
                                                                  const SieveTables& tables,
                                                                  int jobs) {
  if (N < 1) throw std::invalid_argument("degree_profile: N must be >= 1");
  std::vector<std::pair<std::int64_t, std::int64_t>> out(static_cast<std::size_t>(N));
  parallel_for(1, N + 1, jobs, [&](std::int64_t n) {
    out[static_cast<std::size_t>(n - 1)] = {n, degree(n, N, tables)};
  });
  return out;
}

ExactRational link_density(std::int64_t N) {
  if (N < 2) throw std::invalid_argument("link_density: N must be >= 2");
  return ExactRational(divisor_summatory(N) - N, choose2(N));
}

ExactRational link_density_two_term(std::int64_t N) {
  if (N < 2) throw std::invalid_argument("link_density: N must be >= 2");
  return ExactRational(divisor_summatory(N), choose2(N)) - ExactRational(2, N - 1);
}

ClusteringParts clustering(std::int64_t n, std::int64_t N, const SieveTables& tables) {
  require_node(n, N, tables);
  const std::int64_t M = N / n;
  const std::int64_t s = tables.divisor_count(n);
  const std::int64_t d3 = tables.divisor_count_sum(n);

  ClusteringParts parts;
  parts.n = n;
  parts.divisor_links = d3 - 2 * s + 1;
  parts.multiple_links = divisor_summatory(M) - M - (M - 1);
  parts.cross_links = checked_narrow(static_cast<wide_int>(M - 1) * (s - 1));
  parts.neighbor_links = parts.divisor_links + parts.multiple_links + parts.cross_links;
  parts.degree = M + s - 2;
  parts.coefficient = ratio_over_pairs(parts.neighbor_links, parts.degree);
  return parts;
}

std::vector<ClusteringParts> clustering_profile(std::int64_t N, const SieveTables& tables,
                                                int jobs) {
  if (N < 1) throw std::invalid_argument("clustering_profile: N must be >= 1");
  std::vector<ClusteringParts> out(static_cast<std::size_t>(N));
  parallel_for(1, N + 1, jobs, [&](std::int64_t n) {
    out[static_cast<std::size_t>(n - 1)] = clustering(n, N, tables);
  });
  return out;
}

ExactRational prime_clustering(std::int64_t a) {
  if (a < 1) throw std::invalid_argument("prime_clustering: a must be >= 1");
  return ratio_over_pairs(divisor_summatory(a) - a, a);
}

ExactRational delta_clustering(std::int64_t n, std::int64_t N, const SieveTables& tables) {
  if (n + 1 > N) {
    throw std::out_of_range("delta_clustering: n+1=" + std::to_string(n + 1) + " exceeds N");
  }
  return clustering(n, N, tables).coefficient - clustering(n + 1, N, tables).coefficient;
}

bool same_band(std::int64_t n, std::int64_t N) { return n >= 1 && n < N && N / n == N / (n + 1); }

ExactRational delta_clustering_in_band(std::int64_t n, std::int64_t N, const SieveTables& tables) {
  require_node(n, N, tables);
  require_node(n + 1, N, tables);
  if (!same_band(n, N)) {
    throw std::invalid_argument("delta_clustering_in_band: " + std::to_string(n) + " and " +
                                std::to_string(n + 1) + " lie in different floor bands");
  }
  const std::int64_t a = N / n;
  const auto coefficient = [&](std::int64_t m) {
    const FactoredInteger f = factorize(m, tables);
    const std::int64_t s = divisor_count(f);
    return ratio_over_pairs(neighbor_links(s, divisor_count_sum(f), a), a + s - 2);
  };
  return coefficient(n) - coefficient(n + 1);
}

bool delta_zero_predicate(std::int64_t n, std::int64_t N, const SieveTables& tables) {
  require_node(n, N, tables);
  require_node(n + 1, N, tables);
  if (!same_band(n, N)) {
    throw std::invalid_argument("delta_zero_predicate: " + std::to_string(n) + " and " +
                                std::to_string(n + 1) + " lie in different floor bands");
  }
  return tables.divisor_count(n) == tables.divisor_count(n + 1) &&
         tables.divisor_count_sum(n) == tables.divisor_count_sum(n + 1);
}

std::int64_t delta_divisor(std::int64_t n, const SieveTables& tables) {
  return tables.divisor_count(n) - tables.divisor_count(n + 1);
}

}  // namespace divnet
