#include "exptest/datasets.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace exptest {

namespace {

std::vector<Dataset> make_builtin_datasets() {
  std::vector<Dataset> datasets;

  datasets.push_back(Dataset{
      "dataset1",
      {74, 57, 48, 29, 502, 12, 70, 21, 29, 386, 59, 27, 153, 26, 326},
      3,
      "Proschan (1963): times between failures of Boeing 720 air conditioning equipment",
      2.0728,
      0.9992});

  datasets.push_back(Dataset{
      "dataset2",
      {12, 17, 7,  13, 5,  2,  12, 2,  6,  4,  5,  14, 6,  2,  4,  18, 4,
       19, 5,  14, 20, 8,  11, 26, 1,  3,  10, 18, 6,  10, 23, 7,  20, 4,
       7,  6,  12, 10, 20, 3,  12, 3,  18, 18, 14, 14, 8,  6,  22, 11, 8},
      25,
      "NCDC (www.ncdc.noaa.gov): average maximum temperatures for 51 major US cities",
      0.5268,
      0.0038});

  datasets.push_back(Dataset{
      "dataset3",
      {10.49, 8.8,   12.42, 4.58,  6.85,  4.58,  5.0,   4.75,  4.75,  12.25,
       9.5,   13.54, 10.42, 4.65,  9.88,  6.21,  8.6,   7.06,  7.96,  7.89,
       9.7,   13.9,  12.65, 10.0,  12.65, 12.07, 9.8,   13.54, 9.82,  13.54,
       12.42, 12.73, 12.22, 12.25, 12.32, 8.75,  12.0,  17.5,  11.88, 13.13,
       13.56, 15.44, 13.22, 7.28,  11.7,  11.7,  11.6,  10.9,  11.84, 8.0,
       10.2,  5.77,  13.9,  4.58,  12.07, 15.44, 10.2,  11.0,  8.5,   10.99,
       10.39, 9.9,   13.94, 15.21, 13.56, 9.0,   20.47, 15.22, 11.5,  13.9,
       13.22, 10.48, 15.48, 9.8,   12.21, 13.56, 7.04},
      30,
      "Thomas and Jose (2020): geoelectrically derived aquifer thickness",
      1.1914,
      0.0051});

  datasets.push_back(Dataset{
      "dataset4",
      {0.08,  2.09,  3.48,  4.87,  6.94,  8.66,  13.11, 23.63, 0.2,   2.23,
       3.52,  4.98,  6.97,  9.02,  13.29, 0.4,   2.26,  3.57,  5.06,  7.09,
       9.22,  13.8,  25.74, 0.5,   2.46,  3.64,  5.09,  7.26,  9.47,  14.24,
       25.82, 0.51,  2.54,  3.7,   5.17,  7.28,  9.74,  14.76, 6.31,  0.81,
       2.62,  3.82,  5.32,  7.32,  10.06, 14.77, 32.15, 2.64,  3.88,  5.32,
       7.39,  10.34, 14.83, 34.26, 0.9,   2.69,  4.18,  5.34,  7.59,  10.66,
       15.96, 36.66, 1.05,  2.69,  4.23,  5.41,  7.62,  10.75, 16.62, 43.01,
       1.19,  2.75,  4.26,  5.41,  7.63,  17.12, 46.12, 1.26,  2.83,  4.33,
       5.49,  7.66,  11.25, 17.14, 79.05, 1.35,  2.87,  5.62,  7.87,  11.64,
       17.36, 1.4,   3.02,  4.34,  5.71,  7.93,  11.79, 18.1,  1.46,  4.4,
       5.85,  8.26,  11.98, 19.13, 1.76,  3.25,  4.5,   6.25,  8.37,  12.02,
       2.02,  3.31,  4.51,  6.54,  8.53,  12.03, 20.28, 2.02,  3.36,  6.76,
       12.07, 21.73, 2.07,  3.36,  6.93,  8.65,  12.63, 22.69},
      9,
      "Linhart and Zucchini (1986): failure times of an airplane air conditioning system",
      255.8024,
      0.3820});

  datasets.push_back(Dataset{
      "dataset5",
      {5.1, 1.2, 1.3, 0.6, 0.5, 2.4, 0.5, 1.1, 8.0, 0.8, 0.4, 0.6,
       0.9, 0.4, 2.0, 0.5, 5.3, 3.2, 2.7, 2.9, 2.5, 2.3, 1.0, 0.2,
       0.1, 0.1, 1.8, 0.9, 2.0, 4.0, 6.8, 1.2, 0.4, 0.2},
      3,
      "Bhaumik and Gibbons (2006): vinyl chloride from clean-up gradient monitoring wells",
      1734.4354,
      0.8335});

  datasets.push_back(Dataset{
      "dataset6",
      {0.014, 0.034, 0.059, 0.061, 0.069, 0.080, 0.123, 0.142, 0.165, 0.210,
       0.381, 0.464, 0.479, 0.556, 0.574, 0.839, 0.917, 0.969, 0.991, 1.064,
       1.088, 1.091, 1.174, 1.270, 1.275, 1.355, 1.397, 1.477, 1.578, 1.649,
       1.702, 1.893, 1.932, 2.001, 2.161, 2.292, 2.326, 2.337, 2.628, 2.785,
       2.811, 2.886, 2.993, 3.122, 3.248, 3.715, 3.790, 3.857, 3.912, 4.100},
      20,
      "Lawless (2011): thousands of cycles to failure for electrical appliances",
      5.9071,
      0.0000});

  datasets.push_back(Dataset{
      "dataset7",
      {0.0518, 0.0518, 0.1009, 0.1009, 0.1917, 0.1917, 0.1917, 0.2336, 0.2336,
       0.2336, 0.2733, 0.2733, 0.3467, 0.3805, 0.3805, 0.4126, 0.4431, 0.4719,
       0.4719, 0.4993, 0.6162, 0.6550, 0.6550, 0.7059, 0.7211, 0.7356, 0.7623,
       0.7863, 0.8178, 0.8810, 0.9337, 0.9404, 0.9732, 0.9858},
      5,
      "Xiong et al. (2020): sample known to be well fitted by a uniform law",
      422.5549,
      0.0001});

  return datasets;
}

}  // namespace

const std::vector<Dataset>& builtin_datasets() {
  static const std::vector<Dataset> datasets = make_builtin_datasets();
  return datasets;
}

const Dataset& builtin_dataset(const std::string& name) {
  for (const Dataset& dataset : builtin_datasets()) {
    if (dataset.name == name) return dataset;
  }
  throw std::out_of_range("unknown dataset: " + name +
                          " (expected dataset1 .. dataset7)");
}

namespace {

double parse_value(const std::string& token, std::size_t line, std::size_t field) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    std::ostringstream msg;
    msg << "line " << line << ", field " << field << ": not a number: '" << token << "'";
    throw ingest_error(msg.str());
  }
  if (!(value >= 0.0)) {
    std::ostringstream msg;
    msg << "line " << line << ", field " << field << ": negative value " << token
        << " (exponentiality testing expects non-negative data)";
    throw ingest_error(msg.str());
  }
  return value;
}

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

}  // namespace

Dataset ingest_stream(std::istream& in, IngestFormat format, std::string name) {
  Dataset dataset;
  dataset.name = std::move(name);

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::size_t field = 0;
    if (format == IngestFormat::csv) {
      std::istringstream row(line);
      std::string cell;
      while (std::getline(row, cell, ',')) {
        ++field;
        const std::string token = trim(cell);
        if (token.empty()) continue;
        dataset.values.push_back(parse_value(token, line_number, field));
      }
    } else {
      std::istringstream row(line);
      std::string token;
      while (row >> token) {
        ++field;
        dataset.values.push_back(parse_value(token, line_number, field));
      }
    }
  }
  if (dataset.values.empty()) {
    throw ingest_error("input contains no data values");
  }
  dataset.default_window = 0;  // resolved by the caller (recommend_window)
  return dataset;
}

Dataset ingest_file(const std::filesystem::path& path, IngestFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw ingest_error("cannot open data file: " + path.string());
  }
  return ingest_stream(in, format, path.stem().string());
}

}  // namespace exptest
