#include "exptest/commands.hpp"

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace exptest {

namespace {

// Seed for the alternative-distribution pass of a power study: derived from
// the master seed so it is reproducible but does not reuse the null streams
// (reusing them would make the size of the test equal alpha by construction).
std::uint64_t power_run_seed(std::uint64_t master_seed) {
  return derive_stream_seed(master_seed, 0x706f776572ULL);  // "power"
}

bool cell_valid(std::size_t sample_size, int window) {
  return window >= 1 && 2 * static_cast<std::size_t>(window) < sample_size;
}

CriticalValueTable load_or_create_cache(
    const std::optional<std::filesystem::path>& path,
    const CriticalValueTable::Provenance& provenance) {
  if (path && std::filesystem::exists(*path)) {
    std::ifstream in(*path);
    CriticalValueTable cached = CriticalValueTable::load(in);
    if (cached.provenance() == provenance) return cached;
    std::cerr << "cache " << path->string()
              << " was built with a different configuration; recomputing\n";
  }
  return CriticalValueTable(provenance);
}

void save_cache(const std::optional<std::filesystem::path>& path,
                const CriticalValueTable& table) {
  if (!path) return;
  std::ofstream out(*path);
  if (!out) throw simulation_error("cannot write cache file: " + path->string());
  table.save(out);
}

double cached_critical_value(CriticalValueTable& cache, SimulationConfig config,
                             std::size_t sample_size, int window, double alpha) {
  if (const auto hit = cache.find(sample_size, window, alpha)) return *hit;
  config.sample_size = sample_size;
  config.window = window;
  const double value = critical_value(config, alpha);
  cache.set(sample_size, window, alpha, value);
  return value;
}

std::string describe_seed(std::uint64_t seed) {
  std::ostringstream out;
  out << seed;
  return out.str();
}

}  // namespace

TableGrid default_grid() {
  return TableGrid{
      {5, 10, 20, 30, 40, 50, 100},
      {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 14, 15, 19, 20, 24, 30, 35, 40, 45, 49}};
}

void cmd_critical_table(const CriticalTableOptions& options, std::ostream& out) {
  const CriticalValueTable::Provenance provenance{options.seed, options.replications,
                                                  options.convention, options.record_n,
                                                  options.record_k};
  CriticalValueTable cache = load_or_create_cache(options.cache_path, provenance);

  SimulationConfig config;
  config.replications = options.replications;
  config.master_seed = options.seed;
  config.convention = options.convention;
  config.record_n = options.record_n;
  config.record_k = options.record_k;
  config.threads = options.threads;

  // One table per alpha, but each (N, m) is simulated at most once: every
  // requested level is a quantile of the same null run.
  std::vector<GridTable> tables(options.alphas.size());
  for (std::size_t a = 0; a < options.alphas.size(); ++a) {
    GridTable& table = tables[a];
    std::ostringstream title;
    title << "critical values of |Delta_{" << options.record_n << ","
          << options.record_k << "}| at alpha=" << options.alphas[a];
    table.title = title.str();
    table.value_name = "critical_value";
    table.sizes = options.grid.sizes;
    table.windows = options.grid.windows;
    {
      std::ostringstream alpha_text;
      alpha_text << options.alphas[a];
      table.context.emplace_back("alpha", alpha_text.str());
    }
    table.context.emplace_back("seed", describe_seed(options.seed));
    table.context.emplace_back("convention", to_string(options.convention));
    table.cells.assign(table.windows.size(),
                       std::vector<std::optional<double>>(table.sizes.size()));
  }

  for (std::size_t w = 0; w < options.grid.windows.size(); ++w) {
    for (std::size_t s = 0; s < options.grid.sizes.size(); ++s) {
      const std::size_t sample_size = options.grid.sizes[s];
      const int window = options.grid.windows[w];
      if (!cell_valid(sample_size, window)) continue;

      std::vector<double> null_abs;  // filled lazily on the first cache miss
      for (std::size_t a = 0; a < options.alphas.size(); ++a) {
        const double alpha = options.alphas[a];
        if (const auto hit = cache.find(sample_size, window, alpha)) {
          tables[a].cells[w][s] = *hit;
          continue;
        }
        if (null_abs.empty()) {
          config.sample_size = sample_size;
          config.window = window;
          null_abs = simulate_null_abs_delta(config);
        }
        const double value = empirical_quantile(
            null_abs, quantile_level(options.convention, alpha));
        cache.set(sample_size, window, alpha, value);
        tables[a].cells[w][s] = value;
      }
    }
  }

  bool first = true;
  for (const GridTable& table : tables) {
    if (!first && options.format == OutputFormat::markdown) out << "\n";
    out << render_table(table, options.format);
    first = false;
  }

  save_cache(options.cache_path, cache);
}

void cmd_power_table(const PowerTableOptions& options, std::ostream& out) {
  const CriticalValueTable::Provenance provenance{options.seed, options.replications,
                                                  options.convention, options.record_n,
                                                  options.record_k};
  CriticalValueTable cache = load_or_create_cache(options.cache_path, provenance);

  SimulationConfig null_config;
  null_config.replications = options.replications;
  null_config.master_seed = options.seed;
  null_config.convention = options.convention;
  null_config.record_n = options.record_n;
  null_config.record_k = options.record_k;
  null_config.threads = options.threads;

  SimulationConfig alt_config = null_config;
  alt_config.master_seed = power_run_seed(options.seed);

  GridTable table;
  std::ostringstream title;
  title << "power of |Delta_{" << options.record_n << "," << options.record_k
        << "}| against " << options.alternative.describe()
        << " at alpha=" << options.alpha;
  table.title = title.str();
  table.value_name = "power";
  table.sizes = options.grid.sizes;
  table.windows = options.grid.windows;
  {
    std::ostringstream alpha_text;
    alpha_text << options.alpha;
    table.context.emplace_back("alpha", alpha_text.str());
  }
  table.context.emplace_back("alternative", options.alternative.describe());
  table.context.emplace_back("seed", describe_seed(options.seed));
  table.cells.assign(table.windows.size(),
                     std::vector<std::optional<double>>(table.sizes.size()));
  for (std::size_t w = 0; w < table.windows.size(); ++w) {
    for (std::size_t s = 0; s < table.sizes.size(); ++s) {
      if (!cell_valid(table.sizes[s], table.windows[w])) continue;
      const double critical = cached_critical_value(
          cache, null_config, table.sizes[s], table.windows[w], options.alpha);
      alt_config.sample_size = table.sizes[s];
      alt_config.window = table.windows[w];
      table.cells[w][s] = power(alt_config, options.alternative, critical).rejection_rate;
    }
  }
  out << render_table(table, options.format);

  save_cache(options.cache_path, cache);
}

namespace {

struct ResolvedInput {
  Dataset dataset;
  bool is_builtin = false;
};

ResolvedInput resolve_input(const TestOptions& options) {
  for (const Dataset& dataset : builtin_datasets()) {
    if (dataset.name == options.source) return {dataset, true};
  }
  const std::filesystem::path path(options.source);
  if (!std::filesystem::exists(path)) {
    throw ingest_error("no builtin dataset or file named '" + options.source + "'");
  }
  const IngestFormat format = options.input_format.value_or(
      path.extension() == ".csv" ? IngestFormat::csv : IngestFormat::whitespace);
  return {ingest_file(path, format), false};
}

void render_report_markdown(const Dataset& dataset, bool is_builtin, int window,
                            const TestReport& report, std::ostream& out) {
  out << "dataset: " << dataset.name << " (N=" << dataset.size() << ", m=" << window
      << ")\n";
  if (!dataset.source.empty()) out << "source: " << dataset.source << "\n";
  out << "statistic: " << format_fixed(report.statistic.value, 6) << "\n"
      << "lambda_hat: " << format_fixed(report.lambda_hat, 6) << "\n"
      << "p_value: " << format_fixed(report.p_value, 4) << " (R=" << report.replications
      << ", seed=" << report.master_seed << ")\n"
      << "decision: "
      << (report.decision == Decision::reject_exponentiality
              ? "reject exponentiality"
              : "fail to reject exponentiality")
      << " at alpha=" << report.alpha << "\n";
  if (is_builtin && dataset.reference_statistic) {
    out << "reference: statistic " << format_fixed(*dataset.reference_statistic, 4)
        << ", p-value " << format_fixed(*dataset.reference_p_value, 4)
        << " (published values for this N, m; magnitudes are not directly"
           " comparable, see README)\n";
  }
}

}  // namespace

int cmd_test(const TestOptions& options, std::ostream& out) {
  const ResolvedInput input = resolve_input(options);
  const Dataset& dataset = input.dataset;

  int window = 0;
  if (options.window) {
    window = *options.window;
  } else if (input.is_builtin && dataset.default_window > 0) {
    window = dataset.default_window;
  } else {
    window = recommend_window(dataset.size());
  }

  TestReport report =
      bootstrap_test(dataset.values, window, options.alpha, options.replications,
                     options.seed, options.record_n, options.record_k);

  switch (options.format) {
    case OutputFormat::markdown:
      render_report_markdown(dataset, input.is_builtin, window, report, out);
      break;
    case OutputFormat::csv: {
      out << "dataset,N,m,statistic,lambda_hat,p_value,decision,alpha,R,seed\n"
          << dataset.name << "," << dataset.size() << "," << window << ","
          << report.statistic.value << "," << report.lambda_hat << ","
          << report.p_value << ","
          << (report.decision == Decision::reject_exponentiality ? "reject"
                                                                 : "fail-to-reject")
          << "," << report.alpha << "," << report.replications << ","
          << report.master_seed << "\n";
      break;
    }
    case OutputFormat::jsonl: {
      nlohmann::json record;
      record["dataset"] = dataset.name;
      record["N"] = dataset.size();
      record["m"] = window;
      record["statistic"] = report.statistic.value;
      record["lambda_hat"] = report.lambda_hat;
      record["p_value"] = report.p_value;
      record["decision"] = report.decision == Decision::reject_exponentiality
                               ? "reject"
                               : "fail-to-reject";
      record["alpha"] = report.alpha;
      record["R"] = report.replications;
      record["seed"] = report.master_seed;
      if (input.is_builtin && dataset.reference_statistic) {
        record["reference_statistic"] = *dataset.reference_statistic;
        record["reference_p_value"] = *dataset.reference_p_value;
      }
      out << record.dump() << "\n";
      break;
    }
  }
  return report.decision == Decision::reject_exponentiality ? 2 : 0;
}

void cmd_list_datasets(OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::jsonl) {
    for (const Dataset& dataset : builtin_datasets()) {
      nlohmann::json record;
      record["name"] = dataset.name;
      record["N"] = dataset.size();
      record["default_m"] = dataset.default_window;
      record["source"] = dataset.source;
      if (dataset.reference_statistic) {
        record["reference_statistic"] = *dataset.reference_statistic;
        record["reference_p_value"] = *dataset.reference_p_value;
      }
      out << record.dump() << "\n";
    }
    return;
  }
  if (format == OutputFormat::csv) {
    out << "name,N,default_m,source\n";
    for (const Dataset& dataset : builtin_datasets()) {
      out << dataset.name << "," << dataset.size() << "," << dataset.default_window
          << ",\"" << dataset.source << "\"\n";
    }
    return;
  }
  out << "| name | N | default m | source |\n|---|---|---|---|\n";
  for (const Dataset& dataset : builtin_datasets()) {
    out << "| " << dataset.name << " | " << dataset.size() << " | "
        << dataset.default_window << " | " << dataset.source << " |\n";
  }
}

}  // namespace exptest
