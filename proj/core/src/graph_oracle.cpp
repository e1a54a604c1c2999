#include "divnet/graph_oracle.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "divnet/parallel.hpp"

namespace divnet {
namespace {

void require_pairs(const DivisibilityGraph& g, std::int64_t minimum, const char* what) {
  if (g.size() < minimum) {
    throw std::invalid_argument(std::string(what) + ": requires N >= " + std::to_string(minimum));
  }
}

std::int64_t intersection_size(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::int64_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// Fixed block size for the Brandes source reduction; independent of the worker count.
constexpr std::int64_t kSourceBlock = 64;

}  // namespace

DivisibilityGraph::DivisibilityGraph(std::int64_t N) : size_(N) {
  if (N < 1) throw std::invalid_argument("graph size must be >= 1");
  if (N > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw std::invalid_argument("graph size too large: " + std::to_string(N));
  }
  const auto n_nodes = static_cast<std::size_t>(N);
  std::vector<std::size_t> degree(n_nodes + 1, 0);
  for (std::size_t i = 1; i <= n_nodes; ++i) {
    for (std::size_t m = 2 * i; m <= n_nodes; m += i) {
      ++degree[i];
      ++degree[m];
      ++edge_count_;
    }
  }
  offsets_.assign(n_nodes + 2, 0);
  for (std::size_t i = 1; i <= n_nodes; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  targets_.resize(offsets_[n_nodes + 1]);

  // Visiting i in ascending order appends every divisor of m before m's own multiples,
  // so each row comes out sorted.
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 1; i <= n_nodes; ++i) {
    for (std::size_t m = 2 * i; m <= n_nodes; m += i) {
      targets_[cursor[i]++] = static_cast<std::uint32_t>(m);
      targets_[cursor[m]++] = static_cast<std::uint32_t>(i);
    }
  }
}

std::size_t DivisibilityGraph::check(std::int64_t n) const {
  if (n < 1 || n > size_) {
    throw std::out_of_range("node " + std::to_string(n) + " outside [1, " + std::to_string(size_) +
                            "]");
  }
  return static_cast<std::size_t>(n);
}

std::span<const std::uint32_t> DivisibilityGraph::neighbors(std::int64_t n) const {
  const std::size_t i = check(n);
  return {targets_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

bool DivisibilityGraph::adjacent(std::int64_t i, std::int64_t j) const {
  const auto row = neighbors(i);
  static_cast<void>(check(j));
  return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(j));
}

std::int64_t DivisibilityGraph::common_neighbors(std::int64_t s, std::int64_t t) const {
  return intersection_size(neighbors(s), neighbors(t));
}

DivisibilityGraph build_graph(std::int64_t N) { return DivisibilityGraph(N); }

std::int64_t degree_oracle(const DivisibilityGraph& g, std::int64_t n) {
  return static_cast<std::int64_t>(g.neighbors(n).size());
}

std::vector<std::int64_t> edge_count_prefix(const DivisibilityGraph& g) {
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(g.size()), 0);
  std::int64_t running = 0;
  for (std::int64_t m = 1; m <= g.size(); ++m) {
    // Edges whose larger endpoint is m.
    const auto row = g.neighbors(m);
    running += std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(m)) - row.begin();
    prefix[static_cast<std::size_t>(m - 1)] = running;
  }
  return prefix;
}

ExactRational link_density_oracle(const DivisibilityGraph& g) {
  require_pairs(g, 2, "link_density_oracle");
  const std::int64_t N = g.size();
  return ExactRational(g.edge_count(), checked_narrow(static_cast<wide_int>(N) * (N - 1) / 2));
}

std::int64_t neighbor_links_oracle(const DivisibilityGraph& g, std::int64_t n) {
  // Each edge {s,t} among the neighbours is counted once, from its smaller endpoint s.
  // Scan whichever candidate list is shorter and binary-search the other.
  const auto row = g.neighbors(n);
  std::int64_t links = 0;
  for (auto s_it = row.begin(); s_it != row.end(); ++s_it) {
    const std::uint32_t s = *s_it;
    const auto s_row = g.neighbors(s);
    const auto s_above = std::upper_bound(s_row.begin(), s_row.end(), s);
    const std::span<const std::uint32_t> mine(s_above, s_row.end());
    const std::span<const std::uint32_t> theirs(std::next(s_it), row.end());
    const auto& shorter = mine.size() < theirs.size() ? mine : theirs;
    const auto& longer = mine.size() < theirs.size() ? theirs : mine;
    for (const std::uint32_t t : shorter) {
      links += std::binary_search(longer.begin(), longer.end(), t) ? 1 : 0;
    }
  }
  return links;
}

ExactRational clustering_oracle(const DivisibilityGraph& g, std::int64_t n) {
  const auto k = degree_oracle(g, n);
  if (k < 2) return ExactRational{};
  return ExactRational(neighbor_links_oracle(g, n), k * (k - 1) / 2);
}

std::vector<std::int64_t> betweenness_pair_histogram(const DivisibilityGraph& g, std::int64_t n) {
  require_pairs(g, 3, "betweenness");
  const auto row = g.neighbors(n);
  std::vector<std::int64_t> histogram(1, 0);
  for (std::size_t i = 0; i < row.size(); ++i) {
    for (std::size_t j = i + 1; j < row.size(); ++j) {
      if (g.adjacent(row[i], row[j])) continue;
      const auto paths = static_cast<std::size_t>(g.common_neighbors(row[i], row[j]));
      if (paths >= histogram.size()) histogram.resize(paths + 1, 0);
      histogram[paths] += 2;  // (s,t) and (t,s)
    }
  }
  return histogram;
}

ExactRational betweenness_matrix(const DivisibilityGraph& g, std::int64_t n) {
  const auto histogram = betweenness_pair_histogram(g, n);
  ExactRational sum;
  for (std::size_t paths = 1; paths < histogram.size(); ++paths) {
    if (histogram[paths] != 0) sum += ExactRational(histogram[paths], static_cast<std::int64_t>(paths));
  }
  const std::int64_t N = g.size();
  return sum / ExactRational((N - 1) * (N - 2));
}

double betweenness_matrix_float(const DivisibilityGraph& g, std::int64_t n) {
  const auto histogram = betweenness_pair_histogram(g, n);
  double sum = 0.0;
  for (std::size_t paths = 1; paths < histogram.size(); ++paths) {
    sum += static_cast<double>(histogram[paths]) / static_cast<double>(paths);
  }
  const auto N = static_cast<double>(g.size());
  return sum / ((N - 1.0) * (N - 2.0));
}

namespace {

// Single-source Brandes: BFS shortest-path counts, then dependency accumulation in
// reverse BFS order. Adds the dependencies of `source` into `centrality`.
template <typename Value>
void accumulate_source(const DivisibilityGraph& g, std::int64_t source,
                       std::vector<Value>& centrality) {
  const auto N = static_cast<std::size_t>(g.size());
  std::vector<std::int64_t> sigma(N + 1, 0);
  std::vector<std::int64_t> distance(N + 1, -1);
  std::vector<Value> dependency(N + 1, Value{});
  std::vector<std::uint32_t> order;
  order.reserve(N);

  sigma[static_cast<std::size_t>(source)] = 1;
  distance[static_cast<std::size_t>(source)] = 0;
  order.push_back(static_cast<std::uint32_t>(source));
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint32_t v = order[head];
    for (const std::uint32_t w : g.neighbors(v)) {
      if (distance[w] < 0) {
        distance[w] = distance[v] + 1;
        order.push_back(w);
      }
      if (distance[w] == distance[v] + 1) sigma[w] += sigma[v];
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::uint32_t w = *it;
    for (const std::uint32_t v : g.neighbors(w)) {
      if (distance[v] == distance[w] - 1) {
        if constexpr (std::is_same_v<Value, double>) {
          dependency[v] += static_cast<double>(sigma[v]) / static_cast<double>(sigma[w]) *
                           (1.0 + dependency[w]);
        } else {
          dependency[v] += ExactRational(sigma[v], sigma[w]) * (ExactRational(1) + dependency[w]);
        }
      }
    }
    if (w != source) centrality[w] += dependency[w];
  }
}

}  // namespace

std::vector<double> betweenness_brandes(const DivisibilityGraph& g, int jobs) {
  require_pairs(g, 3, "betweenness_brandes");
  const std::int64_t N = g.size();
  const std::int64_t blocks = (N + kSourceBlock - 1) / kSourceBlock;
  std::vector<std::vector<double>> partial(static_cast<std::size_t>(blocks));
  parallel_for(0, blocks, jobs, [&](std::int64_t b) {
    auto& acc = partial[static_cast<std::size_t>(b)];
    acc.assign(static_cast<std::size_t>(N) + 1, 0.0);
    const std::int64_t hi = std::min(N, (b + 1) * kSourceBlock);
    for (std::int64_t s = b * kSourceBlock + 1; s <= hi; ++s) accumulate_source(g, s, acc);
  });
  const double norm = static_cast<double>(N - 1) * static_cast<double>(N - 2);
  std::vector<double> out(static_cast<std::size_t>(N), 0.0);
  for (const auto& acc : partial) {
    for (std::size_t i = 1; i < acc.size(); ++i) out[i - 1] += acc[i];
  }
  for (double& x : out) x /= norm;
  return out;
}

std::vector<ExactRational> betweenness_brandes_exact(const DivisibilityGraph& g) {
  require_pairs(g, 3, "betweenness_brandes");
  const std::int64_t N = g.size();
  std::vector<ExactRational> acc(static_cast<std::size_t>(N) + 1);
  for (std::int64_t s = 1; s <= N; ++s) accumulate_source(g, s, acc);
  const ExactRational norm((N - 1) * (N - 2));
  std::vector<ExactRational> out;
  out.reserve(static_cast<std::size_t>(N));
  for (std::size_t i = 1; i < acc.size(); ++i) out.push_back(acc[i] / norm);
  return out;
}

void write_edge_list(const DivisibilityGraph& g, std::ostream& out) {
  for (std::int64_t i = 1; i <= g.size(); ++i) {
    for (const std::uint32_t j : g.neighbors(i)) {
      if (j > i) out << i << ' ' << j << '\n';
    }
  }
}

}  // namespace divnet
