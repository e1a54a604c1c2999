#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "divnet/analysis.hpp"
#include "divnet/analytic.hpp"
#include "divnet/graph_oracle.hpp"
#include "divnet/numtheory.hpp"
#include "divnet/parallel.hpp"

namespace divnet::cli {
namespace {

class InvalidConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

char separator(Format format) { return format == Format::csv ? ',' : '\t'; }

void write_row(std::ostream& out, Format format, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != 0) out << separator(format);
    out << cells[i];
  }
  out << '\n';
}

bool uses_analytic(Mode mode) { return mode != Mode::oracle; }
bool uses_oracle(Mode mode) { return mode != Mode::analytic; }

MeasureValue exact_value(const ExactRational& value) { return {value.to_double(), value}; }
MeasureValue integer_value(std::int64_t value) { return {static_cast<double>(value), std::nullopt}; }

MeasureProfile degree_profile_for(const RunConfig& config) {
  const std::int64_t N = config.n;
  MeasureProfile profile;
  profile.measure = "k";
  profile.has_analytic = uses_analytic(config.mode);
  profile.has_oracle = uses_oracle(config.mode);
  profile.rows.resize(static_cast<std::size_t>(N));
  for (std::int64_t n = 1; n <= N; ++n) profile.rows[static_cast<std::size_t>(n - 1)].n = n;
  if (profile.has_analytic) {
    const SieveTables tables(N);
    for (const auto& [n, k] : degree_profile(N, tables, config.jobs)) {
      profile.rows[static_cast<std::size_t>(n - 1)].analytic = integer_value(k);
    }
  }
  if (profile.has_oracle) {
    const DivisibilityGraph g(N);
    for (std::int64_t n = 1; n <= N; ++n) {
      profile.rows[static_cast<std::size_t>(n - 1)].oracle = integer_value(degree_oracle(g, n));
    }
  }
  return profile;
}

std::vector<ExactRational> oracle_clustering(std::int64_t N, int jobs) {
  const DivisibilityGraph g(N);
  std::vector<ExactRational> values(static_cast<std::size_t>(N));
  parallel_for(1, N + 1, jobs, [&](std::int64_t n) {
    values[static_cast<std::size_t>(n - 1)] = clustering_oracle(g, n);
  });
  return values;
}

std::vector<ExactRational> analytic_clustering(std::int64_t N, int jobs) {
  const SieveTables tables(N);
  std::vector<ExactRational> values;
  values.reserve(static_cast<std::size_t>(N));
  for (const auto& parts : clustering_profile(N, tables, jobs)) values.push_back(parts.coefficient);
  return values;
}

MeasureProfile clustering_profile_for(const RunConfig& config) {
  const std::int64_t N = config.n;
  MeasureProfile profile;
  profile.measure = "c";
  profile.has_analytic = uses_analytic(config.mode);
  profile.has_oracle = uses_oracle(config.mode);
  profile.has_exact = true;
  profile.rows.resize(static_cast<std::size_t>(N));
  for (std::int64_t n = 1; n <= N; ++n) profile.rows[static_cast<std::size_t>(n - 1)].n = n;
  if (profile.has_analytic) {
    const auto values = analytic_clustering(N, config.jobs);
    for (std::size_t i = 0; i < values.size(); ++i) profile.rows[i].analytic = exact_value(values[i]);
  }
  if (profile.has_oracle) {
    const auto values = oracle_clustering(N, config.jobs);
    for (std::size_t i = 0; i < values.size(); ++i) profile.rows[i].oracle = exact_value(values[i]);
  }
  return profile;
}

MeasureProfile delta_profile_for(const RunConfig& config) {
  const std::int64_t N = config.n;
  if (N < 2) throw InvalidConfig("delta requires --n >= 2");
  const SieveTables tables(N);
  MeasureProfile profile;
  profile.measure = "delta_c";
  profile.has_analytic = uses_analytic(config.mode);
  profile.has_oracle = uses_oracle(config.mode);
  profile.has_exact = true;
  profile.extra_columns = {"delta_s"};
  std::vector<ExactRational> analytic;
  std::vector<ExactRational> oracle;
  if (profile.has_analytic) analytic = analytic_clustering(N, config.jobs);
  if (profile.has_oracle) oracle = oracle_clustering(N, config.jobs);
  for (std::int64_t n = 1; n < N; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    MeasureRow row;
    row.n = n;
    if (profile.has_analytic) row.analytic = exact_value(analytic[i] - analytic[i + 1]);
    if (profile.has_oracle) row.oracle = exact_value(oracle[i] - oracle[i + 1]);
    row.extra.push_back(delta_divisor(n, tables));
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

MeasureProfile betweenness_profile_for(const RunConfig& config) {
  const std::int64_t N = config.n;
  if (N < 3) throw InvalidConfig("betweenness requires --n >= 3");
  if (N > config.max_betweenness_n) {
    throw InvalidConfig(fmt::format(
        "betweenness capped at N={} (raise with DIVNET_MAX_BETWEENNESS_N)", config.max_betweenness_n));
  }
  const DivisibilityGraph g(N);
  const bool exact = N <= kExactBetweennessMaxN;
  MeasureProfile profile;
  profile.measure = "x";
  profile.analytic_label = "matrix";
  profile.oracle_label = "brandes";
  profile.has_analytic = uses_analytic(config.mode);
  profile.has_oracle = uses_oracle(config.mode);
  profile.has_exact = exact;
  profile.rows.resize(static_cast<std::size_t>(N));
  for (std::int64_t n = 1; n <= N; ++n) profile.rows[static_cast<std::size_t>(n - 1)].n = n;
  if (profile.has_analytic) {
    parallel_for(1, N + 1, config.jobs, [&](std::int64_t n) {
      auto& row = profile.rows[static_cast<std::size_t>(n - 1)];
      row.analytic = exact ? exact_value(betweenness_matrix(g, n))
                           : MeasureValue{betweenness_matrix_float(g, n), std::nullopt};
    });
  }
  if (profile.has_oracle) {
    if (exact) {
      const auto values = betweenness_brandes_exact(g);
      for (std::size_t i = 0; i < values.size(); ++i) profile.rows[i].oracle = exact_value(values[i]);
    } else {
      const auto values = betweenness_brandes(g, config.jobs);
      for (std::size_t i = 0; i < values.size(); ++i) profile.rows[i].oracle = MeasureValue{values[i], {}};
    }
  }
  return profile;
}

void run_linkdensity(const RunConfig& config, std::ostream& out) {
  const std::int64_t N = config.n;
  if (N < 2) throw InvalidConfig("linkdensity requires --n >= 2");
  std::vector<std::string> header{"N"};
  if (uses_analytic(config.mode)) header.emplace_back("ld_analytic");
  if (uses_oracle(config.mode)) header.emplace_back("ld_oracle");
  header.emplace_back("ld_exact");
  write_row(out, config.format, header);

  std::vector<std::int64_t> edges;
  if (uses_oracle(config.mode)) edges = edge_count_prefix(DivisibilityGraph(N));
  for (std::int64_t m = 2; m <= N; ++m) {
    std::vector<std::string> row{std::to_string(m)};
    ExactRational exact;
    if (uses_analytic(config.mode)) {
      exact = link_density(m);
      row.push_back(format_decimal(exact.to_double()));
    }
    if (uses_oracle(config.mode)) {
      const ExactRational oracle(edges[static_cast<std::size_t>(m - 1)], m * (m - 1) / 2);
      if (!uses_analytic(config.mode)) exact = oracle;
      row.push_back(format_decimal(oracle.to_double()));
    }
    row.push_back(exact.to_string());
    write_row(out, config.format, row);
  }
}

void run_scaling(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.samples < 3) throw InvalidConfig("scaling requires --samples >= 3");
  if (config.nmin < 2 || config.nmax <= config.nmin) {
    throw InvalidConfig("scaling requires 2 <= --nmin < --nmax");
  }
  const auto sizes = geometric_sizes(config.nmin, config.nmax, config.samples);
  const ScalingFit fit = scaling_fit(sizes);
  write_row(out, config.format, {"N", "link_density", "log_N", "log_link_density"});
  for (std::size_t i = 0; i < fit.sizes.size(); ++i) {
    write_row(out, config.format,
              {std::to_string(fit.sizes[i]), format_decimal(fit.densities[i]),
               format_decimal(std::log(static_cast<double>(fit.sizes[i]))),
               format_decimal(std::log(fit.densities[i]))});
  }
  err << "slope=" << format_decimal(fit.slope) << " intercept=" << format_decimal(fit.intercept)
      << " residual=" << format_decimal(fit.residual) << '\n';
}

void run_bands(const RunConfig& config, std::ostream& out) {
  if (config.n < 2) throw InvalidConfig("bands requires --n >= 2");
  const SieveTables tables(config.n);
  write_row(out, config.format,
            {"a", "lo", "hi", "prime_count", "prime_degree", "prime_clustering",
             "prime_clustering_exact"});
  for (const auto& band : band_decomposition(config.n, tables)) {
    write_row(out, config.format,
              {std::to_string(band.a), std::to_string(band.lo), std::to_string(band.hi),
               std::to_string(band.prime_count), std::to_string(band.prime_degree),
               format_decimal(band.prime_clustering.to_double()), band.prime_clustering.to_string()});
  }
}

void run_census(const RunConfig& config, std::ostream& out) {
  if (config.n < 2) throw InvalidConfig("census requires --n >= 2");
  const SieveTables tables(config.n);
  const CensusTable census = heathbrown_census(config.n, tables);
  write_row(out, config.format, {"k", "count"});
  for (const auto& [k, count] : census.counts) {
    if (config.k && *config.k != k) continue;
    write_row(out, config.format, {std::to_string(k), std::to_string(count)});
  }
  if (config.k && !census.counts.contains(*config.k)) {
    write_row(out, config.format, {std::to_string(*config.k), "0"});
  }
}

struct Check {
  explicit Check(std::string name) : measure(std::move(name)) {}

  std::string measure;
  std::int64_t checked = 0;
  std::int64_t mismatches = 0;
  std::optional<std::int64_t> first_mismatch;
};

void compare(Check& check, std::int64_t n, bool equal) {
  ++check.checked;
  if (equal) return;
  ++check.mismatches;
  if (!check.first_mismatch) check.first_mismatch = n;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::int64_t N = config.n;
  if (N < 2) throw InvalidConfig("verify requires --n >= 2");
  const SieveTables tables(N);
  const DivisibilityGraph g(N);

  Check degrees("degree");
  for (const auto& [n, k] : degree_profile(N, tables, config.jobs)) {
    compare(degrees, n, k == degree_oracle(g, n));
  }
  Check clustering_check("clustering");
  const auto analytic = analytic_clustering(N, config.jobs);
  const auto oracle = oracle_clustering(N, config.jobs);
  for (std::int64_t n = 1; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    compare(clustering_check, n, analytic[i] == oracle[i]);
  }
  Check density("link_density");
  const auto edges = edge_count_prefix(g);
  for (std::int64_t m = 2; m <= N; ++m) {
    compare(density, m,
            link_density(m) == ExactRational(edges[static_cast<std::size_t>(m - 1)], m * (m - 1) / 2));
  }

  write_row(out, config.format, {"measure", "checked", "mismatches"});
  bool ok = true;
  for (const Check* c : {&degrees, &clustering_check, &density}) {
    write_row(out, config.format,
              {c->measure, std::to_string(c->checked), std::to_string(c->mismatches)});
    if (c->first_mismatch) {
      ok = false;
      err << "mismatch: " << c->measure << " first differs at n=" << *c->first_mismatch << '\n';
    }
  }
  return ok ? 0 : 1;
}

void validate(const RunConfig& config) {
  if (config.command != Command::scaling && config.n < 1) {
    throw InvalidConfig("--n must be >= 1");
  }
  if (config.jobs < 1) throw InvalidConfig("--jobs must be >= 1");
  if (config.command == Command::verify && config.mode != Mode::both) {
    throw InvalidConfig("verify requires --mode both");
  }
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::degrees:
      emit_plot_data(degree_profile_for(config), config.format, out);
      return 0;
    case Command::clustering:
      emit_plot_data(clustering_profile_for(config), config.format, out);
      return 0;
    case Command::delta:
      emit_plot_data(delta_profile_for(config), config.format, out);
      return 0;
    case Command::betweenness:
      emit_plot_data(betweenness_profile_for(config), config.format, out);
      return 0;
    case Command::linkdensity:
      run_linkdensity(config, out);
      return 0;
    case Command::scaling:
      run_scaling(config, out, err);
      return 0;
    case Command::bands:
      run_bands(config, out);
      return 0;
    case Command::census:
      run_census(config, out);
      return 0;
    case Command::verify:
      return run_verify(config, out, err);
    case Command::export_graph:
      write_edge_list(DivisibilityGraph(config.n), out);
      return 0;
  }
  return 2;
}

}  // namespace

std::string format_decimal(double value) { return fmt::format("{:.12g}", value); }

void emit_plot_data(const MeasureProfile& profile, Format format, std::ostream& out) {
  if (profile.rows.empty()) throw std::invalid_argument("emit_plot_data: empty profile");
  std::vector<std::string> header{"n"};
  if (profile.has_analytic) header.push_back(profile.measure + "_" + profile.analytic_label);
  if (profile.has_oracle) header.push_back(profile.measure + "_" + profile.oracle_label);
  if (profile.has_exact) header.push_back(profile.measure + "_exact");
  for (const auto& extra : profile.extra_columns) header.push_back(extra);
  write_row(out, format, header);

  for (const MeasureRow& row : profile.rows) {
    std::vector<std::string> cells{std::to_string(row.n)};
    if (profile.has_analytic) cells.push_back(row.analytic ? format_decimal(row.analytic->decimal) : "");
    if (profile.has_oracle) cells.push_back(row.oracle ? format_decimal(row.oracle->decimal) : "");
    if (profile.has_exact) {
      const MeasureValue* source = row.analytic ? &*row.analytic : row.oracle ? &*row.oracle : nullptr;
      cells.push_back(source && source->exact ? source->exact->to_string() : "");
    }
    for (const std::int64_t v : row.extra) cells.push_back(std::to_string(v));
    write_row(out, format, cells);
  }
}

void emit_plot_data(const MeasureProfile& profile, Format format, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  emit_plot_data(profile, format, file);
  if (!file.flush()) throw std::runtime_error("failed writing " + path);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    std::unique_ptr<std::ofstream> file;
    if (!config.out.empty()) {
      file = std::make_unique<std::ofstream>(config.out, std::ios::binary);
      if (!*file) throw InvalidConfig("cannot open " + config.out + " for writing");
    }
    const int status = dispatch(config, file ? *file : out, err);
    if (file && !file->flush()) {
      err << "error: failed writing " << config.out << '\n';
      return 2;
    }
    return status;
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"divnet: closed-form and graph measures of the divisibility network"};
  app.set_version_flag("--version", "divnet 0.1.0");

  const std::map<std::string, Command> commands{
      {"degrees", Command::degrees},       {"clustering", Command::clustering},
      {"delta", Command::delta},           {"linkdensity", Command::linkdensity},
      {"scaling", Command::scaling},       {"betweenness", Command::betweenness},
      {"bands", Command::bands},           {"census", Command::census},
      {"verify", Command::verify},         {"export-graph", Command::export_graph},
  };
  const std::map<std::string, Mode> modes{
      {"analytic", Mode::analytic}, {"oracle", Mode::oracle}, {"both", Mode::both}};
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"tsv", Format::tsv}};

  const auto keys = [](const auto& table) {
    std::vector<std::string> out;
    for (const auto& entry : table) out.push_back(entry.first);
    return out;
  };

  RunConfig config;
  std::string command_name;
  std::string mode_name = "analytic";
  std::string format_name = "csv";
  std::int64_t k = 0;
  app.add_option("command", command_name, "what to compute")
      ->required()
      ->check(CLI::IsMember(keys(commands)));
  app.add_option("--n", config.n, "network size N");
  auto* mode = app.add_option("--mode", mode_name, "which computation path(s) to run")
                   ->check(CLI::IsMember(keys(modes)));
  app.add_option("--out", config.out, "output path (default: stdout)");
  app.add_option("--format", format_name, "field separator")->check(CLI::IsMember(keys(formats)));
  app.add_option("--jobs", config.jobs, "worker threads");
  app.add_option("--nmin", config.nmin, "smallest N for scaling");
  app.add_option("--nmax", config.nmax, "largest N for scaling");
  app.add_option("--samples", config.samples, "number of geometric sizes for scaling");
  auto* k_option = app.add_option("--k", k, "census: only report this offset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  config.command = commands.at(command_name);
  config.mode = modes.at(mode_name);
  config.format = formats.at(format_name);
  if (k_option->count() > 0) config.k = k;
  if (config.command == Command::verify && mode->count() == 0) config.mode = Mode::both;
  if (const char* cap = std::getenv("DIVNET_MAX_BETWEENNESS_N")) {
    try {
      config.max_betweenness_n = std::stoll(cap);
    } catch (const std::exception&) {
      std::cerr << "error: DIVNET_MAX_BETWEENNESS_N is not an integer: " << cap << '\n';
      return 2;
    }
  }
  return run(config, std::cout, std::cerr);
}

}  // namespace divnet::cli
