#include "exptest/render.hpp"

#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

using namespace exptest;

namespace {
GridTable demo_table() {
  GridTable table;
  table.title = "demo";
  table.value_name = "critical_value";
  table.sizes = {5, 20};
  table.windows = {1, 2};
  table.cells = {{0.71739, 0.3197}, {std::nullopt, 0.13551}};
  table.context = {{"alpha", "0.1"}};
  return table;
}
}  // namespace

TEST_CASE("markdown rendering uses 4 decimals and blank invalid cells") {
  const std::string text = render_table(demo_table(), OutputFormat::markdown);
  CHECK(text.find("| m\\N | 5 | 20 |") != std::string::npos);
  CHECK(text.find("| 1 | 0.7174 | 0.3197 |") != std::string::npos);
  CHECK(text.find("| 2 |  | 0.1355 |") != std::string::npos);
}

TEST_CASE("csv rendering keeps full precision and empty cells") {
  const std::string text = render_table(demo_table(), OutputFormat::csv);
  CHECK(text.find("m,N5,N20") == 0);
  CHECK(text.find("1,0.71739,0.3197") != std::string::npos);
  CHECK(text.find("2,,0.13551") != std::string::npos);
}

TEST_CASE("json-lines rendering emits one record per defined cell") {
  const std::string text = render_table(demo_table(), OutputFormat::jsonl);
  std::size_t lines = 0;
  std::istringstream stream(text);
  std::string line;
  bool saw_skipped_cell = false;
  while (std::getline(stream, line)) {
    ++lines;
    const auto record = nlohmann::json::parse(line);
    CHECK(record["alpha"] == "0.1");
    CHECK(record.contains("critical_value"));
    if (record["N"] == 5 && record["m"] == 2) saw_skipped_cell = true;
  }
  CHECK(lines == 3);
  CHECK(!saw_skipped_cell);
}

TEST_CASE("format parsing") {
  CHECK(output_format_from_string("markdown") == OutputFormat::markdown);
  CHECK(output_format_from_string("json-lines") == OutputFormat::jsonl);
  CHECK_THROWS_AS(output_format_from_string("yaml"), std::invalid_argument);
  CHECK(format_fixed(0.123456, 4) == "0.1235");
}
