#include "exptest/render.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace exptest {

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "markdown") return OutputFormat::markdown;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json-lines" || name == "jsonl") return OutputFormat::jsonl;
  throw std::invalid_argument("unknown output format: " + name);
}

const char* to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::markdown: return "markdown";
    case OutputFormat::csv: return "csv";
    case OutputFormat::jsonl: return "json-lines";
  }
  return "?";
}

std::string format_fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

namespace {

std::string render_markdown(const GridTable& table) {
  std::ostringstream out;
  if (!table.title.empty()) out << "### " << table.title << "\n\n";
  out << "| m\\N |";
  for (const std::size_t n : table.sizes) out << " " << n << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < table.sizes.size(); ++i) out << "---|";
  out << "\n";
  for (std::size_t w = 0; w < table.windows.size(); ++w) {
    out << "| " << table.windows[w] << " |";
    for (std::size_t s = 0; s < table.sizes.size(); ++s) {
      const auto& cell = table.cells[w][s];
      if (cell) {
        out << " " << format_fixed(*cell, 4) << " |";
      } else {
        out << "  |";
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string render_csv(const GridTable& table) {
  std::ostringstream out;
  out << "m";
  for (const std::size_t n : table.sizes) out << ",N" << n;
  out << "\n";
  char buffer[64];
  for (std::size_t w = 0; w < table.windows.size(); ++w) {
    out << table.windows[w];
    for (std::size_t s = 0; s < table.sizes.size(); ++s) {
      out << ",";
      if (table.cells[w][s]) {
        std::snprintf(buffer, sizeof(buffer), "%.10g", *table.cells[w][s]);
        out << buffer;
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string render_jsonl(const GridTable& table) {
  std::ostringstream out;
  for (std::size_t w = 0; w < table.windows.size(); ++w) {
    for (std::size_t s = 0; s < table.sizes.size(); ++s) {
      if (!table.cells[w][s]) continue;
      nlohmann::json record;
      for (const auto& [key, value] : table.context) record[key] = value;
      record["N"] = table.sizes[s];
      record["m"] = table.windows[w];
      record[table.value_name.empty() ? "value" : table.value_name] =
          *table.cells[w][s];
      out << record.dump() << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::string render_table(const GridTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::markdown: return render_markdown(table);
    case OutputFormat::csv: return render_csv(table);
    case OutputFormat::jsonl: return render_jsonl(table);
  }
  return {};
}

}  // namespace exptest
