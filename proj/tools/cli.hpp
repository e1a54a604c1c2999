#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "divnet/exact_rational.hpp"

namespace divnet::cli {

enum class Command {
  degrees,
  clustering,
  delta,
  linkdensity,
  scaling,
  betweenness,
  bands,
  census,
  verify,
  export_graph,
};

enum class Mode { analytic, oracle, both };
enum class Format { csv, tsv };

/// Default largest N accepted by `betweenness`; DIVNET_MAX_BETWEENNESS_N overrides it.
inline constexpr std::int64_t kDefaultMaxBetweennessN = 10000;
/// Betweenness gets an exact-rational column up to this N.
inline constexpr std::int64_t kExactBetweennessMaxN = 500;

struct RunConfig {
  Command command = Command::degrees;
  std::int64_t n = 0;
  Mode mode = Mode::analytic;
  std::string out;  ///< empty writes to the supplied stream
  Format format = Format::csv;
  int jobs = 1;
  std::int64_t nmin = 256;
  std::int64_t nmax = 65536;
  int samples = 9;
  std::optional<std::int64_t> k;
  std::int64_t max_betweenness_n = kDefaultMaxBetweennessN;
};

struct MeasureValue {
  double decimal = 0.0;
  std::optional<ExactRational> exact;
};

struct MeasureRow {
  std::int64_t n = 0;
  std::optional<MeasureValue> analytic;
  std::optional<MeasureValue> oracle;
  std::vector<std::int64_t> extra;
};

/// Per-node values of one measure from one or both computation paths.
struct MeasureProfile {
  std::string measure;  ///< column prefix, e.g. "k" or "c"
  std::string analytic_label = "analytic";
  std::string oracle_label = "oracle";
  bool has_analytic = false;
  bool has_oracle = false;
  bool has_exact = false;
  std::vector<std::string> extra_columns;
  std::vector<MeasureRow> rows;
};

/// Writes the profile as a header row plus one row per node. Decimal values use 12
/// significant digits; the exact column (when present) is "p/q". Throws
/// std::invalid_argument for an empty profile.
void emit_plot_data(const MeasureProfile& profile, Format format, std::ostream& out);
/// Same, to a file. Throws std::runtime_error when the path cannot be written.
void emit_plot_data(const MeasureProfile& profile, Format format, const std::string& path);

/// Validates and executes a config. Output goes to config.out when set, otherwise to `out`;
/// diagnostics go to `err`. Returns 0 on success, 1 on a verification mismatch, 2 on an
/// invalid config.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Exit status as for run().
int main_entry(int argc, char** argv);

std::string format_decimal(double value);

}  // namespace divnet::cli
