// exptest: goodness-of-fit testing for exponentiality via the extropy of
// upper k-record values. Subcommands regenerate the Monte Carlo tables
// (critical values, power, size) and run the bootstrap test on embedded or
// user-supplied datasets.
//
// Exit codes for `test`: 0 = fail to reject, 2 = reject, 1 = error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exptest/commands.hpp"

namespace {

using exptest::OutputFormat;

struct CommonFlags {
  int replications = 10000;
  std::uint64_t seed = exptest::kDefaultSeed;
  std::string convention = "one-sided";
  std::string format = "markdown";
  std::string cache;
  std::string output;
  int record_n = 2;
  int record_k = 2;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_convention = true) {
  cmd->add_option("--reps", flags.replications, "Monte Carlo replications R")
      ->check(CLI::Range(100, 10'000'000));
  cmd->add_option("--seed", flags.seed, "master seed for the replication streams");
  if (with_convention) {
    cmd->add_option("--convention", flags.convention,
                    "critical-value quantile convention")
        ->check(CLI::IsMember({"one-sided", "two-sided-style"}));
  }
  cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"markdown", "csv", "json-lines"}));
  cmd->add_option("--output", flags.output, "write output to this file instead of stdout");
  cmd->add_option("--n", flags.record_n, "record index n")->check(CLI::Range(1, 30));
  cmd->add_option("--k", flags.record_k, "record order k")->check(CLI::Range(1, 30));
  cmd->add_option("--threads", flags.threads,
                  "worker threads (0 = hardware concurrency)");
}

std::ostream& open_output(const CommonFlags& flags, std::ofstream& file) {
  if (flags.output.empty()) return std::cout;
  file.open(flags.output);
  if (!file) throw std::runtime_error("cannot open output file: " + flags.output);
  return file;
}

exptest::Distribution parse_alternative(const std::string& name,
                                        const std::vector<double>& params) {
  if (name == "uniform") {
    const double lo = params.size() > 0 ? params[0] : 0.0;
    const double hi = params.size() > 1 ? params[1] : 1.0;
    return exptest::Distribution::uniform(lo, hi);
  }
  if (name == "weibull") {
    const double shape = params.size() > 0 ? params[0] : 1.0;
    const double scale = params.size() > 1 ? params[1] : 1.0;
    return exptest::Distribution::weibull(shape, scale);
  }
  if (name == "exponential") {
    const double rate = params.size() > 0 ? params[0] : 1.0;
    return exptest::Distribution::exponential(rate);
  }
  throw CLI::ValidationError("--alt must be one of uniform, weibull, exponential");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exponentiality testing via the extropy of upper k-record values"};
  app.require_subcommand(1);

  // critical-table ----------------------------------------------------------
  CommonFlags crit_flags;
  std::vector<std::size_t> crit_sizes;
  std::vector<int> crit_windows;
  std::vector<double> crit_alphas;
  auto* crit = app.add_subcommand(
      "critical-table", "Monte Carlo critical values of |Delta| on an (N, m) grid");
  add_common(crit, crit_flags);
  crit->add_option("--sizes", crit_sizes, "sample sizes N (default: published grid)");
  crit->add_option("--windows", crit_windows, "window sizes m (default: published grid)");
  crit->add_option("--alpha", crit_alphas, "significance levels (default: 0.10 0.05 0.01)");
  crit->add_option("--cache", crit_flags.cache, "critical-value cache file");

  // power-table -------------------------------------------------------------
  CommonFlags power_flags;
  std::vector<std::size_t> power_sizes;
  std::vector<int> power_windows;
  double power_alpha = 0.05;
  std::string alt_name = "uniform";
  std::vector<double> alt_params;
  auto* pow_cmd = app.add_subcommand(
      "power-table", "rejection rates against an alternative distribution");
  add_common(pow_cmd, power_flags);
  pow_cmd->add_option("--sizes", power_sizes, "sample sizes N");
  pow_cmd->add_option("--windows", power_windows, "window sizes m");
  pow_cmd->add_option("--alpha", power_alpha, "significance level");
  pow_cmd->add_option("--alt", alt_name, "alternative family")
      ->check(CLI::IsMember({"uniform", "weibull", "exponential"}));
  pow_cmd->add_option("--alt-params", alt_params,
                      "alternative parameters (uniform: lo hi; weibull: shape scale;"
                      " exponential: rate)");
  pow_cmd->add_option("--cache", power_flags.cache, "critical-value cache file");

  // test ----------------------------------------------------------------
  CommonFlags test_flags;
  std::string test_source;
  int test_window = 0;
  double test_alpha = 0.05;
  std::string input_format;
  auto* test_cmd = app.add_subcommand(
      "test", "bootstrap exponentiality test on a dataset or data file");
  test_cmd->add_option("source", test_source,
                       "builtin dataset name (dataset1..dataset7) or file path")
      ->required();
  add_common(test_cmd, test_flags, /*with_convention=*/false);
  test_cmd->add_option("--m", test_window, "window size (default: dataset default, "
                       "else the recommended value for N)")
      ->check(CLI::PositiveNumber);
  test_cmd->add_option("--alpha", test_alpha, "significance level");
  test_cmd->add_option("--input-format", input_format, "data file layout")
      ->check(CLI::IsMember({"csv", "whitespace"}));

  // list-datasets -------------------------------------------------------
  CommonFlags list_flags;
  auto* list_cmd = app.add_subcommand("list-datasets", "describe the embedded datasets");
  list_cmd->add_option("--format", list_flags.format, "output format")
      ->check(CLI::IsMember({"markdown", "csv", "json-lines"}));
  list_cmd->add_option("--output", list_flags.output, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // normalize: anything but clean help/version output is exit code 1
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (crit->parsed()) {
      exptest::CriticalTableOptions options;
      if (!crit_sizes.empty()) options.grid.sizes = crit_sizes;
      if (!crit_windows.empty()) options.grid.windows = crit_windows;
      if (!crit_alphas.empty()) options.alphas = crit_alphas;
      options.replications = crit_flags.replications;
      options.seed = crit_flags.seed;
      options.convention = exptest::quantile_convention_from_string(crit_flags.convention);
      options.record_n = crit_flags.record_n;
      options.record_k = crit_flags.record_k;
      options.threads = crit_flags.threads;
      if (!crit_flags.cache.empty()) options.cache_path = crit_flags.cache;
      options.format = exptest::output_format_from_string(crit_flags.format);
      std::ofstream file;
      exptest::cmd_critical_table(options, open_output(crit_flags, file));
      return 0;
    }
    if (pow_cmd->parsed()) {
      exptest::PowerTableOptions options;
      if (!power_sizes.empty()) options.grid.sizes = power_sizes;
      if (!power_windows.empty()) options.grid.windows = power_windows;
      options.alpha = power_alpha;
      options.alternative = parse_alternative(alt_name, alt_params);
      options.replications = power_flags.replications;
      options.seed = power_flags.seed;
      options.convention = exptest::quantile_convention_from_string(power_flags.convention);
      options.record_n = power_flags.record_n;
      options.record_k = power_flags.record_k;
      options.threads = power_flags.threads;
      if (!power_flags.cache.empty()) options.cache_path = power_flags.cache;
      options.format = exptest::output_format_from_string(power_flags.format);
      std::ofstream file;
      exptest::cmd_power_table(options, open_output(power_flags, file));
      return 0;
    }
    if (test_cmd->parsed()) {
      exptest::TestOptions options;
      options.source = test_source;
      if (!input_format.empty()) {
        options.input_format = input_format == "csv" ? exptest::IngestFormat::csv
                                                     : exptest::IngestFormat::whitespace;
      }
      if (test_window > 0) options.window = test_window;
      options.alpha = test_alpha;
      options.replications = test_flags.replications;
      options.seed = test_flags.seed;
      options.record_n = test_flags.record_n;
      options.record_k = test_flags.record_k;
      options.format = exptest::output_format_from_string(test_flags.format);
      options.threads = test_flags.threads;
      std::ofstream file;
      return exptest::cmd_test(options, open_output(test_flags, file));
    }
    if (list_cmd->parsed()) {
      std::ofstream file;
      exptest::cmd_list_datasets(exptest::output_format_from_string(list_flags.format),
                                 open_output(list_flags, file));
      return 0;
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
