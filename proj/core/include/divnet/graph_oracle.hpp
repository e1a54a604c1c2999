#pragma once

/**
 * @file graph_oracle.hpp
 * @brief Ground-truth measures from an explicitly materialized divisibility graph.
 *
 * G_N has vertices 1..N and an edge {i, j} iff i != j and one divides the
 * other. Adjacency is kept as sorted compressed rows; adjacency-matrix
 * formulas are evaluated over that sparse form ([A^2]_st is the size of a
 * sorted-list intersection).
 */

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "divnet/exact_rational.hpp"

namespace divnet {

class DivisibilityGraph {
 public:
  /// Builds G_N by the multiples loop. Throws std::invalid_argument for N < 1.
  explicit DivisibilityGraph(std::int64_t N);

  [[nodiscard]] std::int64_t size() const { return size_; }
  [[nodiscard]] std::int64_t edge_count() const { return edge_count_; }

  /// Strictly ascending neighbour ids of n.
  [[nodiscard]] std::span<const std::uint32_t> neighbors(std::int64_t n) const;
  [[nodiscard]] bool adjacent(std::int64_t i, std::int64_t j) const;
  /// [A^2]_st: number of common neighbours.
  [[nodiscard]] std::int64_t common_neighbors(std::int64_t s, std::int64_t t) const;

 private:
  [[nodiscard]] std::size_t check(std::int64_t n) const;

  std::int64_t size_;
  std::int64_t edge_count_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
};

DivisibilityGraph build_graph(std::int64_t N);

std::int64_t degree_oracle(const DivisibilityGraph& g, std::int64_t n);

/// Edge counts of the induced subgraphs on 1..m, which are exactly G_m, for m = 1..N.
/// Index m-1 holds G_m's edge count.
std::vector<std::int64_t> edge_count_prefix(const DivisibilityGraph& g);

/// edge_count / C(N,2). Requires N >= 2.
ExactRational link_density_oracle(const DivisibilityGraph& g);

/// Number of edges among the neighbours of n (triangles through n).
std::int64_t neighbor_links_oracle(const DivisibilityGraph& g, std::int64_t n);

/// Local clustering by triangle counting; 0 when the degree is below 2.
ExactRational clustering_oracle(const DivisibilityGraph& g, std::int64_t n);

/// Per-node histogram of the geodesic-count denominators seen by the adjacency-matrix
/// betweenness sum: entry c counts ordered pairs (s, t) of non-adjacent neighbours of n
/// with [A^2]_st == c.
std::vector<std::int64_t> betweenness_pair_histogram(const DivisibilityGraph& g, std::int64_t n);

/// Adjacency-matrix betweenness:
///   x_n = sum over ordered (s,t), s,t != n, of (1 - A_st) A_sn A_nt / [A^2]_st
/// normalized by (N-1)(N-2). Requires N >= 3.
ExactRational betweenness_matrix(const DivisibilityGraph& g, std::int64_t n);
double betweenness_matrix_float(const DivisibilityGraph& g, std::int64_t n);

/// Brandes accumulation over every source, normalized by (N-1)(N-2). Index i holds node i+1.
/// Requires N >= 3. Sources are reduced in fixed blocks so the result does not depend on jobs.
std::vector<double> betweenness_brandes(const DivisibilityGraph& g, int jobs = 1);
std::vector<ExactRational> betweenness_brandes_exact(const DivisibilityGraph& g);

/// Writes "i j" per edge, i < j, ascending by i then j, one per line.
void write_edge_list(const DivisibilityGraph& g, std::ostream& out);

}  // namespace divnet
