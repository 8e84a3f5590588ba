#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exptest {

enum class OutputFormat { markdown, csv, jsonl };

OutputFormat output_format_from_string(const std::string& name);
const char* to_string(OutputFormat format);

// A windows-by-sizes grid of optional cells; empty cells mark (N, m)
// combinations where the estimator is undefined (m >= N/2).
struct GridTable {
  std::string title;
  std::string value_name;  // jsonl field name for the cell value
  std::vector<std::size_t> sizes;
  std::vector<int> windows;
  std::vector<std::vector<std::optional<double>>> cells;  // [window][size]
  // Context fields (e.g. alpha, seed) echoed into every jsonl record.
  std::vector<std::pair<std::string, std::string>> context;
};

// Cells render with 4 decimals in markdown, full precision elsewhere.
std::string render_table(const GridTable& table, OutputFormat format);

std::string format_fixed(double value, int decimals);

}  // namespace exptest
