#include "divnet/graph_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "divnet/analytic.hpp"
#include "divnet/numtheory.hpp"

namespace divnet {
namespace {

TEST(BuildGraph, RejectsEmpty) { EXPECT_THROW(build_graph(0), std::invalid_argument); }

TEST(BuildGraph, SmallGraphs) {
  const auto g1 = build_graph(1);
  EXPECT_EQ(g1.edge_count(), 0);
  EXPECT_TRUE(g1.neighbors(1).empty());

  const auto g2 = build_graph(2);
  EXPECT_EQ(g2.edge_count(), 1);
  EXPECT_TRUE(g2.adjacent(1, 2));

  std::ostringstream edges;
  write_edge_list(build_graph(4), edges);
  EXPECT_EQ(edges.str(), "1 2\n1 3\n1 4\n2 4\n");

  EXPECT_EQ(build_graph(10).edge_count(), 17);
}

TEST(BuildGraph, MatchesPairScan) {
  for (std::int64_t N = 1; N <= 80; ++N) {
    const auto g = build_graph(N);
    ASSERT_EQ(g.edge_count(), brute::edge_count(N));
    for (std::int64_t n = 1; n <= N; ++n) {
      const auto row = g.neighbors(n);
      const auto expected = brute::neighbors(n, N);
      ASSERT_TRUE(std::equal(row.begin(), row.end(), expected.begin(), expected.end())) << n;
    }
  }
}

TEST(BuildGraph, StructuralInvariantsUpTo10k) {
  const std::int64_t N = 10000;
  const auto g = build_graph(N);
  std::int64_t degree_sum = 0;
  for (std::int64_t n = 1; n <= N; ++n) {
    const auto row = g.neighbors(n);
    degree_sum += static_cast<std::int64_t>(row.size());
    ASSERT_TRUE(std::adjacent_find(row.begin(), row.end(), std::greater_equal<>()) == row.end()) << n;
    for (const auto m : row) {
      ASSERT_NE(m, n);
      ASSERT_TRUE(g.adjacent(m, n));
    }
  }
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
  EXPECT_EQ(g.edge_count(), divisor_summatory(N) - N);
  EXPECT_EQ(degree_oracle(g, 1), N - 1);
}

TEST(BuildGraph, EdgeCountIdentityForEveryN) {
  const auto prefix = edge_count_prefix(build_graph(10000));
  for (std::int64_t N = 1; N <= 10000; ++N) {
    ASSERT_EQ(prefix[static_cast<std::size_t>(N - 1)], divisor_summatory(N) - N) << N;
  }
  for (const std::int64_t N : {1, 2, 7, 64, 999}) {
    EXPECT_EQ(prefix[static_cast<std::size_t>(N - 1)], build_graph(N).edge_count());
  }
}

TEST(BuildGraph, NonAdjacentPairsShareNodeOne) {
  const auto g = build_graph(300);
  for (std::int64_t s = 2; s <= 300; ++s) {
    for (std::int64_t t = s + 1; t <= 300; ++t) {
      if (!g.adjacent(s, t)) ASSERT_GE(g.common_neighbors(s, t), 1);
    }
  }
}

TEST(DegreeOracle, Examples) {
  const auto g = build_graph(100);
  EXPECT_EQ(degree_oracle(g, 71), 1);
  EXPECT_EQ(degree_oracle(g, 1), 99);
  EXPECT_EQ(degree_oracle(g, 12), 12);
  EXPECT_THROW(degree_oracle(g, 101), std::out_of_range);
}

TEST(LinkDensityOracle, Examples) {
  EXPECT_EQ(link_density_oracle(build_graph(2)), ExactRational(1));
  EXPECT_EQ(link_density_oracle(build_graph(3)), ExactRational(2, 3));
  EXPECT_THROW(link_density_oracle(build_graph(1)), std::invalid_argument);
  EXPECT_EQ(link_density_oracle(build_graph(10000)), link_density(10000));
}

TEST(ClusteringOracle, Examples) {
  const auto g = build_graph(100);
  EXPECT_EQ(clustering_oracle(g, 93), ExactRational(2, 3));
  EXPECT_EQ(clustering_oracle(build_graph(4), 1), ExactRational(1, 3));
  for (std::int64_t p = 51; p <= 100; ++p) {
    if (brute::is_prime(p)) EXPECT_EQ(clustering_oracle(g, p), ExactRational()) << p;
  }
}

TEST(ClusteringOracle, MatchesBruteForce) {
  for (const std::int64_t N : {5, 20, 64, 101}) {
    const auto g = build_graph(N);
    for (std::int64_t n = 1; n <= N; ++n) {
      const auto [num, den] = brute::clustering(n, N);
      ASSERT_EQ(clustering_oracle(g, n), ExactRational(num, den)) << n;
    }
  }
}

TEST(ProfilesAgree, AnalyticEqualsOracleExactly) {
  for (const std::int64_t N : {10, 100, 1000, 5000}) {
    const auto t = build_sieve(N);
    const auto g = build_graph(N);
    ASSERT_EQ(link_density(N), link_density_oracle(g));
    for (std::int64_t n = 1; n <= N; ++n) {
      const auto parts = clustering(n, N, t);
      ASSERT_EQ(degree(n, N, t), degree_oracle(g, n)) << n;
      ASSERT_EQ(parts.neighbor_links, neighbor_links_oracle(g, n)) << n;
      ASSERT_EQ(parts.coefficient, clustering_oracle(g, n)) << n;
    }
  }
}

TEST(Betweenness, FourNodes) {
  // Non-adjacent pairs {2,3} and {3,4} each have the single geodesic through 1; counted as
  // ordered pairs that is 4 / ((N-1)(N-2)) = 4/6.
  const auto g = build_graph(4);
  EXPECT_EQ(betweenness_matrix(g, 1), ExactRational(2, 3));
  EXPECT_EQ(betweenness_matrix(g, 2), ExactRational());
  EXPECT_EQ(betweenness_matrix(g, 3), ExactRational());
  const auto brandes = betweenness_brandes_exact(g);
  EXPECT_EQ(brandes, (std::vector<ExactRational>{ExactRational(2, 3), {}, {}, {}}));
}

TEST(Betweenness, RejectsTinyGraphs) {
  const auto g = build_graph(2);
  EXPECT_THROW(betweenness_matrix(g, 1), std::invalid_argument);
  EXPECT_THROW(betweenness_brandes(g), std::invalid_argument);
  EXPECT_THROW(betweenness_brandes_exact(g), std::invalid_argument);
}

TEST(Betweenness, KnownValuesOfG10) {
  // Frozen from an independent all-pairs geodesic enumeration.
  const auto g = build_graph(10);
  EXPECT_EQ(betweenness_matrix(g, 1), ExactRational(2, 3));
  EXPECT_EQ(betweenness_matrix(g, 2), ExactRational(5, 72));
  EXPECT_EQ(betweenness_matrix(g, 3), ExactRational(1, 72));
  EXPECT_EQ(betweenness_matrix(g, 6), ExactRational(1, 72));
  EXPECT_EQ(betweenness_matrix(g, 10), ExactRational(1, 72));
  EXPECT_EQ(betweenness_matrix(g, 4), ExactRational());
}

TEST(Betweenness, AllFormsAgreeWithGeodesicEnumeration) {
  for (const std::int64_t N : {3, 4, 12, 30, 45}) {
    const auto g = build_graph(N);
    const auto reference = brute::betweenness(N);
    const auto exact = betweenness_brandes_exact(g);
    const auto floating = betweenness_brandes(g);
    for (std::int64_t n = 1; n <= N; ++n) {
      const auto i = static_cast<std::size_t>(n - 1);
      const auto matrix = betweenness_matrix(g, n);
      ASSERT_EQ(matrix, exact[i]) << n;
      ASSERT_NEAR(matrix.to_double(), static_cast<double>(reference[i]), 1e-12) << n;
      ASSERT_NEAR(floating[i], static_cast<double>(reference[i]), 1e-12) << n;
      ASSERT_NEAR(betweenness_matrix_float(g, n), matrix.to_double(), 1e-15) << n;
    }
  }
}

TEST(Betweenness, CliqueNeighbourhoodsHaveZeroCentrality) {
  const std::int64_t N = 400;
  const auto g = build_graph(N);
  const auto t = build_sieve(N);
  for (std::int64_t n = 1; n <= N; ++n) {
    if (clustering(n, N, t).coefficient == ExactRational(1) || degree_oracle(g, n) < 2) {
      ASSERT_TRUE(betweenness_matrix(g, n).is_zero()) << n;
    }
  }
}

TEST(Betweenness, BrandesIndependentOfJobs) {
  const auto g = build_graph(700);
  EXPECT_EQ(betweenness_brandes(g, 1), betweenness_brandes(g, 3));
  EXPECT_EQ(betweenness_brandes(g, 1), betweenness_brandes(g, 8));
}

}  // namespace
}  // namespace divnet
