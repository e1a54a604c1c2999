// Acceptance suite: one check per exit criterion, each printing a single PASS/FAIL line.
// Usage: acceptance [criterion...]   (no arguments runs every criterion)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "divnet/analysis.hpp"
#include "divnet/analytic.hpp"
#include "divnet/graph_oracle.hpp"
#include "divnet/numtheory.hpp"

#ifdef DIVNET_HAVE_CLI
#include "cli.hpp"
#endif

namespace {

using namespace divnet;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_seconds;  // 0 means no runtime bound
  std::function<Outcome()> check;
};

Outcome degree_equality() {
  Outcome out;
  for (const std::int64_t N : {100, 10000, 20000}) {
    const SieveTables t(N);
    const DivisibilityGraph g(N);
    for (std::int64_t n = 1; n <= N; ++n) {
      if (degree(n, N, t) != degree_oracle(g, n)) {
        out.fail("N=" + std::to_string(N) + " n=" + std::to_string(n));
        return out;
      }
    }
  }
  out.detail = "all nodes equal for N in {100, 10000, 20000}";
  return out;
}

Outcome prime_band_structure() {
  Outcome out;
  const std::int64_t N = 10000;
  const SieveTables t(N);
  const DivisibilityGraph g(N);
  std::int64_t top = 0;
  std::int64_t second = 0;
  for (std::int64_t p = N / 3 + 1; p <= N; ++p) {
    if (!t.is_prime(p)) continue;
    const std::int64_t expected = p > N / 2 ? 1 : 2;
    (p > N / 2 ? top : second) += 1;
    if (degree(p, N, t) != expected || degree_oracle(g, p) != expected) {
      out.fail("prime " + std::to_string(p) + " has degree " + std::to_string(degree_oracle(g, p)));
    }
  }
  if (out.pass) {
    out.detail = std::to_string(top) + " primes of degree 1, " + std::to_string(second) +
                 " primes of degree 2";
  }
  return out;
}

Outcome link_density_equality() {
  Outcome out;
  for (std::int64_t N = 2; N <= 2000; ++N) {
    const ExactRational oracle = link_density_oracle(DivisibilityGraph(N));
    if (link_density_two_term(N) != oracle || link_density(N) != oracle) {
      out.fail("N=" + std::to_string(N));
      return out;
    }
  }
  out.detail = "exact equality for N = 2..2000";
  return out;
}

Outcome link_density_scaling() {
  Outcome out;
  const auto sizes = geometric_sizes(256, 65536, 9);
  const ScalingFit fit = scaling_fit(sizes);
  std::ostringstream detail;
  detail << "slope " << fit.slope << " over N = 2^8..2^16 (required [-0.80, -0.70])";
  if (!(fit.slope >= -0.80 && fit.slope <= -0.70)) {
    out.fail(detail.str());
  } else {
    out.detail = detail.str();
  }
  return out;
}

Outcome clustering_equality() {
  Outcome out;
  for (const std::int64_t N : {100, 5000}) {
    const SieveTables t(N);
    const DivisibilityGraph g(N);
    for (std::int64_t n = 1; n <= N; ++n) {
      if (clustering(n, N, t).coefficient != clustering_oracle(g, n)) {
        out.fail("N=" + std::to_string(N) + " n=" + std::to_string(n));
        return out;
      }
    }
  }
  out.detail = "exact equality for every node, N in {100, 5000}";
  return out;
}

Outcome prime_clustering_bands() {
  Outcome out;
  const std::int64_t N = 1000;
  const SieveTables t(N);
  const DivisibilityGraph g(N);
  std::int64_t checked = 0;
  for (std::int64_t p = 167; p <= 333; ++p) {
    if (!t.is_prime(p)) continue;
    const ExactRational expected = p > 200 ? ExactRational(2, 3) : ExactRational(1, 2);
    ++checked;
    if (clustering(p, N, t).coefficient != expected || clustering_oracle(g, p) != expected) {
      out.fail("prime " + std::to_string(p) + " has c_p = " + clustering_oracle(g, p).to_string());
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " primes in (166, 333] checked";
  return out;
}

Outcome delta_facts() {
  Outcome out;
  const SieveTables t(100);
  const auto expect = [&](std::int64_t n, std::int64_t N, const ExactRational& value) {
    const ExactRational got = delta_clustering(n, N, t);
    if (got != value) {
      out.fail("delta c_" + std::to_string(n) + " at N=" + std::to_string(N) + " is " + got.to_string());
    }
  };
  expect(93, 100, ExactRational());
  expect(94, 100, ExactRational());
  expect(86, 100, ExactRational());
  expect(82, 100, ExactRational(2, 3));
  expect(3, 5, ExactRational(-1));
  if (out.pass) out.detail = "delta c_93 = c_94 = c_86 = 0, delta c_82 = 2/3 (N=100); delta c_3 = -1 (N=5)";
  return out;
}

Outcome zero_condition() {
  Outcome out;
  const std::int64_t N = 10000;
  const SieveTables t(N);
  std::int64_t pairs = 0;
  std::int64_t holding = 0;
  for (std::int64_t n = 1; n < N; ++n) {
    if (!same_band(n, N)) continue;
    ++pairs;
    if (!delta_zero_predicate(n, N, t)) continue;
    ++holding;
    if (!delta_clustering(n, N, t).is_zero()) out.fail("counterexample at n=" + std::to_string(n));
  }
  if (out.pass) {
    out.detail = std::to_string(pairs) + " in-band pairs, " + std::to_string(holding) +
                 " satisfy the condition, 0 counterexamples";
  }
  return out;
}

Outcome betweenness_equivalence() {
  Outcome out;
  {
    const DivisibilityGraph g(1000);
    const auto brandes = betweenness_brandes(g);
    double worst = 0.0;
    for (std::int64_t n = 1; n <= 1000; ++n) {
      worst = std::max(worst, std::abs(betweenness_matrix_float(g, n) -
                                       brandes[static_cast<std::size_t>(n - 1)]));
    }
    if (worst > 1e-9) out.fail("float mode max deviation " + std::to_string(worst) + " at N=1000");
    std::ostringstream detail;
    detail << "N=1000 float max |diff| = " << worst;
    out.detail = detail.str();
  }
  for (const std::int64_t N : {3, 10, 50, 200}) {
    const DivisibilityGraph g(N);
    const auto brandes = betweenness_brandes_exact(g);
    for (std::int64_t n = 1; n <= N; ++n) {
      if (betweenness_matrix(g, n) != brandes[static_cast<std::size_t>(n - 1)]) {
        out.fail("exact mismatch at N=" + std::to_string(N) + " n=" + std::to_string(n));
      }
    }
  }
  if (out.pass) out.detail += "; exact rational equality at N in {3, 10, 50, 200}";
  return out;
}

Outcome census_facts() {
  Outcome out;
  const SieveTables t(100000);
  const auto zero = census_members(100, 0, t);
  for (const std::int64_t n : {93, 94, 85, 86}) {
    if (std::find(zero.begin(), zero.end(), n) == zero.end()) {
      out.fail("(" + std::to_string(n) + "," + std::to_string(n + 1) + ") missing from k=0");
    }
  }
  const auto two = census_members(100, 2, t);
  if (std::find(two.begin(), two.end(), 82) == two.end()) out.fail("(82,83) missing from k=2");
  std::int64_t previous = 0;
  std::ostringstream counts;
  for (const std::int64_t N : {100, 1000, 10000, 100000}) {
    const auto table = heathbrown_census(N, t);
    const std::int64_t count = table.counts.contains(0) ? table.counts.at(0) : 0;
    counts << (N == 100 ? "" : ", ") << count;
    if (count < previous) out.fail("k=0 count decreased at N=" + std::to_string(N));
    previous = count;
  }
  if (out.pass) out.detail = "k=0 counts at N=1e2..1e5: " + counts.str();
  return out;
}

Outcome fifty_node_values() {
  Outcome out;
  const SieveTables t(50);
  const DivisibilityGraph g(50);
  const ExactRational c32 = clustering(32, 50, t).coefficient;
  const ExactRational c45 = clustering(45, 50, t).coefficient;
  if (c32 != ExactRational(1) || clustering_oracle(g, 32) != c32) out.fail("c_32 = " + c32.to_string());
  if (c45 != ExactRational(7, 10) || clustering_oracle(g, 45) != c45) out.fail("c_45 = " + c45.to_string());
  if (out.pass) {
    out.detail = "N=50: c_32 = 1, c_45 = 7/10 on both paths (20/21 and 47/66 are c_32 and c_12 at N=100)";
  }
  return out;
}

#ifdef DIVNET_HAVE_CLI
Outcome determinism() {
  Outcome out;
  using cli::Command;
  struct Case {
    Command command;
    std::int64_t n;
    cli::Mode mode;
  };
  const std::vector<Case> cases{
      {Command::degrees, 3000, cli::Mode::both},     {Command::clustering, 3000, cli::Mode::both},
      {Command::delta, 3000, cli::Mode::both},       {Command::linkdensity, 3000, cli::Mode::both},
      {Command::scaling, 0, cli::Mode::analytic},    {Command::betweenness, 500, cli::Mode::both},
      {Command::betweenness, 800, cli::Mode::both},  {Command::bands, 3000, cli::Mode::analytic},
      {Command::census, 3000, cli::Mode::analytic},  {Command::verify, 3000, cli::Mode::both},
      {Command::export_graph, 3000, cli::Mode::analytic},
  };
  for (const auto& c : cases) {
    std::string reference;
    for (const int jobs : {1, 1, 3, 8}) {
      cli::RunConfig config;
      config.command = c.command;
      config.n = c.n;
      config.mode = c.mode;
      config.jobs = jobs;
      std::ostringstream stream;
      std::ostringstream err;
      const int status = cli::run(config, stream, err);
      if (status != 0) {
        out.fail("command exited " + std::to_string(status) + ": " + err.str());
        return out;
      }
      if (jobs == 1 && reference.empty()) {
        reference = stream.str();
      } else if (stream.str() != reference) {
        out.fail("output differs with --jobs " + std::to_string(jobs));
        return out;
      }
    }
  }
  out.detail = std::to_string(cases.size()) + " command configurations byte-identical across runs and jobs {1, 3, 8}";
  return out;
}
#else
Outcome determinism() {
  Outcome out;
  out.fail("built without the CLI (DIVNET_BUILD_TOOLS=OFF)");
  return out;
}
#endif

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "degree equality", 10.0, degree_equality},
      {2, "prime band structure", 0.0, prime_band_structure},
      {3, "link density equality", 30.0, link_density_equality},
      {4, "link density scaling", 5.0, link_density_scaling},
      {5, "clustering equality", 60.0, clustering_equality},
      {6, "prime clustering bands", 0.0, prime_clustering_bands},
      {7, "delta c facts", 0.0, delta_facts},
      {8, "zero-condition implication", 0.0, zero_condition},
      {9, "betweenness equivalence", 60.0, betweenness_equivalence},
      {10, "census facts", 0.0, census_facts},
      {11, "N=50 clustering values", 0.0, fifty_node_values},
      {12, "determinism", 0.0, determinism},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds) {
      outcome.fail("runtime " + std::to_string(seconds) + " s exceeds " +
                   std::to_string(c.time_limit_seconds) + " s");
    }
    all_pass = all_pass && outcome.pass;
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << "criterion " << c.id << " [" << c.title << "]: "
         << (outcome.pass ? "PASS" : "FAIL") << " (" << seconds << " s) " << outcome.detail;
    std::cout << line.str() << std::endl;
  }
  return all_pass ? 0 : 1;
}
