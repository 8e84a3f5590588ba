#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exptest {

class ingest_error : public std::runtime_error {
 public:
  explicit ingest_error(const std::string& what) : std::runtime_error(what) {}
};

struct Dataset {
  std::string name;
  std::vector<double> values;
  int default_window = 0;
  std::string source;
  // Published statistic / p-value for the (N, default_window) setting, kept
  // for side-by-side reporting. See the README for the known scale
  // discrepancy between the published magnitudes and the estimator.
  std::optional<double> reference_statistic;
  std::optional<double> reference_p_value;

  std::size_t size() const { return values.size(); }
};

// The seven embedded benchmark datasets (dataset1 .. dataset7).
const std::vector<Dataset>& builtin_datasets();

// Embedded dataset by name; throws std::out_of_range for unknown names.
const Dataset& builtin_dataset(const std::string& name);

enum class IngestFormat { csv, whitespace };

// Parses a user-supplied data file into a dataset. Values must be
// non-negative decimal numbers (decimal point, no locale grouping); errors
// carry the line and field of the offending token.
Dataset ingest_stream(std::istream& in, IngestFormat format, std::string name);
Dataset ingest_file(const std::filesystem::path& path, IngestFormat format);

}  // namespace exptest
