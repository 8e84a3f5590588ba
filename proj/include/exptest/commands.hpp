#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "exptest/datasets.hpp"
#include "exptest/distribution.hpp"
#include "exptest/render.hpp"
#include "exptest/simulation.hpp"

namespace exptest {

// The (N, m) grid the published tables use; invalid combinations render as
// blank cells.
struct TableGrid {
  std::vector<std::size_t> sizes;
  std::vector<int> windows;
};

TableGrid default_grid();

struct CriticalTableOptions {
  TableGrid grid = default_grid();
  std::vector<double> alphas = {0.10, 0.05, 0.01};
  int replications = 10000;
  std::uint64_t seed = kDefaultSeed;
  QuantileConvention convention = QuantileConvention::one_sided;
  int record_n = 2;
  int record_k = 2;
  int threads = 0;
  std::optional<std::filesystem::path> cache_path;
  OutputFormat format = OutputFormat::markdown;
};

// One critical-value table per significance level. Reuses rows from the
// cache file when its header matches (seed, R, convention, n, k) and folds
// newly computed rows back into it.
void cmd_critical_table(const CriticalTableOptions& options, std::ostream& out);

struct PowerTableOptions {
  TableGrid grid = default_grid();
  double alpha = 0.05;
  Distribution alternative = Distribution::uniform(0.0, 1.0);
  int replications = 10000;
  std::uint64_t seed = kDefaultSeed;
  QuantileConvention convention = QuantileConvention::one_sided;
  int record_n = 2;
  int record_k = 2;
  int threads = 0;
  std::optional<std::filesystem::path> cache_path;
  OutputFormat format = OutputFormat::markdown;
};

// Rejection rates against the alternative, using critical values simulated
// under the same seed. The alternative replications run on a seed derived
// from the master seed so the two passes stay independent.
void cmd_power_table(const PowerTableOptions& options, std::ostream& out);

struct TestOptions {
  std::string source;  // builtin dataset name, or a path to a data file
  std::optional<IngestFormat> input_format;  // default: csv iff extension is .csv
  std::optional<int> window;
  double alpha = 0.05;
  int replications = 10000;
  std::uint64_t seed = kDefaultSeed;
  int record_n = 2;
  int record_k = 2;
  OutputFormat format = OutputFormat::markdown;
  int threads = 0;
};

// Runs the bootstrap exponentiality test and renders the report. Returns
// the process exit code contract: 0 = fail to reject, 2 = reject (errors
// surface as exceptions and become exit code 1 in the CLI driver).
int cmd_test(const TestOptions& options, std::ostream& out);

void cmd_list_datasets(OutputFormat format, std::ostream& out);

}  // namespace exptest
