#include "exptest/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace exptest {

const char* to_string(QuantileConvention convention) {
  return convention == QuantileConvention::one_sided ? "one-sided" : "two-sided-style";
}

QuantileConvention quantile_convention_from_string(const std::string& name) {
  if (name == "one-sided") return QuantileConvention::one_sided;
  if (name == "two-sided-style") return QuantileConvention::two_sided_style;
  throw simulation_error("unknown quantile convention: " + name);
}

void SimulationConfig::validate() const {
  if (sample_size < 3) throw simulation_error("config: sample size must be >= 3");
  if (window < 1 || 2 * static_cast<std::size_t>(window) >= sample_size) {
    throw simulation_error("config: window must satisfy 1 <= m < N/2");
  }
  if (replications < 100) throw simulation_error("config: need at least 100 replications");
  if (record_n < 1 || record_k < 1) throw simulation_error("config: record n,k must be >= 1");
}

double quantile_level(QuantileConvention convention, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw simulation_error("alpha must lie strictly inside (0, 1)");
  }
  const double level = convention == QuantileConvention::one_sided ? 1.0 - alpha
                                                                   : 1.0 - alpha / 2.0;
  if (!(level > 0.0 && level < 1.0)) {
    throw simulation_error("quantile level must lie strictly inside (0, 1)");
  }
  return level;
}

double empirical_quantile(std::vector<double> values, double level) {
  if (values.empty()) throw simulation_error("empirical_quantile: empty sample");
  if (!(level > 0.0 && level < 1.0)) {
    throw simulation_error("empirical_quantile: level must lie in (0, 1)");
  }
  std::sort(values.begin(), values.end());
  auto index = static_cast<std::size_t>(std::ceil(level * values.size()));
  index = std::clamp<std::size_t>(index, 1, values.size());
  return values[index - 1];
}

std::vector<double> sample_from(const Distribution& dist, std::size_t count,
                                SplitMix64& stream) {
  std::vector<double> sample(count);
  for (double& x : sample) x = dist.quantile(stream.uniform01());
  return sample;
}

namespace {

// Statistic of one replication; NaN marks a degenerate draw.
double replicate_once(const Distribution& dist, const SimulationConfig& config,
                      std::uint64_t replication) {
  SplitMix64 stream = replication_stream(config.master_seed, replication);
  std::vector<double> raw = sample_from(dist, config.sample_size, stream);
  try {
    const SortedSample sorted = SortedSample::from_raw(std::move(raw));
    if (config.record_n == 2 && config.record_k == 2) {
      return delta22_estimate(sorted, config.window).value;
    }
    return delta_estimate(sorted, config.window, config.record_n, config.record_k).value;
  } catch (const degenerate_sample_error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

int worker_count(const SimulationConfig& config) {
  if (config.threads > 0) return config.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::vector<double> simulate_delta(const Distribution& dist,
                                   const SimulationConfig& config) {
  config.validate();
  const int reps = config.replications;
  std::vector<double> stats(static_cast<std::size_t>(reps));

  const int workers = std::min(worker_count(config), reps);
  if (workers <= 1) {
    for (int r = 0; r < reps; ++r) {
      stats[static_cast<std::size_t>(r)] =
          replicate_once(dist, config, static_cast<std::uint64_t>(r));
    }
    return stats;
  }

  // Static partition by replication index; every statistic lands in its own
  // slot, so the outcome is independent of scheduling.
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int r = w; r < reps; r += workers) {
        stats[static_cast<std::size_t>(r)] =
            replicate_once(dist, config, static_cast<std::uint64_t>(r));
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return stats;
}

namespace {

struct SplitStats {
  std::vector<double> finite;
  int degenerate = 0;
};

SplitStats split_degenerate(const std::vector<double>& stats) {
  SplitStats out;
  out.finite.reserve(stats.size());
  for (double v : stats) {
    if (std::isnan(v)) {
      ++out.degenerate;
    } else {
      out.finite.push_back(v);
    }
  }
  return out;
}

}  // namespace

std::vector<double> simulate_null_abs_delta(const SimulationConfig& config) {
  const std::vector<double> stats =
      simulate_delta(Distribution::exponential(1.0), config);
  SplitStats split = split_degenerate(stats);
  if (split.degenerate * 100 > config.replications) {
    std::ostringstream msg;
    msg << "null simulation: " << split.degenerate << " of " << config.replications
        << " replications were degenerate (> 1%)";
    throw simulation_error(msg.str());
  }
  for (double& v : split.finite) v = std::fabs(v);
  return std::move(split.finite);
}

double critical_value(const SimulationConfig& config, double alpha) {
  const double level = quantile_level(config.convention, alpha);
  return empirical_quantile(simulate_null_abs_delta(config), level);
}

PowerResult power(const SimulationConfig& config, const Distribution& alternative,
                  double critical) {
  if (!(critical > 0.0) || !std::isfinite(critical)) {
    throw simulation_error("power: critical value must be positive and finite");
  }
  const std::vector<double> stats = simulate_delta(alternative, config);
  const SplitStats split = split_degenerate(stats);
  if (split.degenerate * 20 > config.replications) {
    std::ostringstream msg;
    msg << "power: " << split.degenerate << " of " << config.replications
        << " replications were degenerate (> 5%)";
    throw simulation_error(msg.str());
  }
  PowerResult result;
  result.degenerate_count = split.degenerate;
  result.effective_replications = static_cast<int>(split.finite.size());
  for (double v : split.finite) {
    if (std::fabs(v) > critical) ++result.rejections;
  }
  if (result.effective_replications > 0) {
    result.rejection_rate =
        static_cast<double>(result.rejections) / result.effective_replications;
  }
  return result;
}

TestReport bootstrap_test(std::span<const double> data, int window, double alpha,
                          int replications, std::uint64_t seed, int record_n,
                          int record_k) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw simulation_error("bootstrap_test: alpha must lie in (0, 1)");
  }
  if (data.size() < 3) {
    throw std::invalid_argument("bootstrap_test: need at least 3 observations");
  }
  for (double v : data) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(
          "bootstrap_test: exponentiality testing requires finite non-negative data");
    }
  }
  const double mean = std::accumulate(data.begin(), data.end(), 0.0) /
                      static_cast<double>(data.size());
  if (!(mean > 0.0)) {
    throw std::invalid_argument("bootstrap_test: sample mean must be positive");
  }

  const SortedSample sorted = SortedSample::from_raw({data.begin(), data.end()});
  const DeltaStatistic observed =
      (record_n == 2 && record_k == 2)
          ? delta22_estimate(sorted, window)
          : delta_estimate(sorted, window, record_n, record_k);

  SimulationConfig config;
  config.sample_size = data.size();
  config.window = window;
  config.replications = replications;
  config.master_seed = seed;
  config.record_n = record_n;
  config.record_k = record_k;
  config.validate();

  const double lambda_hat = 1.0 / mean;
  const std::vector<double> stats =
      simulate_delta(Distribution::exponential(lambda_hat), config);
  const SplitStats split = split_degenerate(stats);

  int at_least_as_extreme = 0;
  const double observed_abs = std::fabs(observed.value);
  for (double v : split.finite) {
    if (std::fabs(v) >= observed_abs) ++at_least_as_extreme;
  }
  const int effective = static_cast<int>(split.finite.size());
  const double p = (1.0 + at_least_as_extreme) / (effective + 1.0);

  TestReport report;
  report.statistic = observed;
  report.lambda_hat = lambda_hat;
  report.p_value = p;
  report.alpha = alpha;
  report.decision = p < alpha ? Decision::reject_exponentiality : Decision::fail_to_reject;
  report.replications = replications;
  report.master_seed = seed;
  report.degenerate_count = split.degenerate;
  return report;
}

int recommend_window(std::size_t sample_size) {
  if (sample_size < 3) throw simulation_error("recommend_window: need N >= 3");
  int window = 25;
  if (sample_size <= 10) {
    window = 4;
  } else if (sample_size <= 20) {
    window = 7;
  } else if (sample_size <= 40) {
    window = 12;
  } else if (sample_size <= 60) {
    window = 16;
  } else if (sample_size <= 99) {
    window = 21;
  }
  return std::min(window, max_window(sample_size));
}

std::string CriticalValueTable::alpha_key(double alpha) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", alpha);
  return buffer;
}

std::optional<double> CriticalValueTable::find(std::size_t sample_size, int window,
                                               double alpha) const {
  const auto it = entries_.find(Key{sample_size, window, alpha_key(alpha)});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CriticalValueTable::set(std::size_t sample_size, int window, double alpha,
                             double critical) {
  if (!(critical > 0.0) || !std::isfinite(critical)) {
    std::ostringstream msg;
    msg << "critical value for N=" << sample_size << " m=" << window
        << " alpha=" << alpha << " must be positive and finite, got " << critical;
    throw simulation_error(msg.str());
  }
  entries_[Key{sample_size, window, alpha_key(alpha)}] = critical;
}

void CriticalValueTable::save(std::ostream& out) const {
  out << "# seed=" << provenance_.seed << " R=" << provenance_.replications
      << " convention=" << to_string(provenance_.convention)
      << " n=" << provenance_.record_n << " k=" << provenance_.record_k << "\n";
  char buffer[64];
  for (const auto& [key, value] : entries_) {
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    out << std::get<0>(key) << "," << std::get<1>(key) << "," << std::get<2>(key)
        << "," << buffer << "\n";
  }
}

CriticalValueTable CriticalValueTable::load(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("# ", 0) != 0) {
    throw simulation_error("critical-value cache: missing header line");
  }
  Provenance provenance;
  {
    std::istringstream fields(header.substr(2));
    std::string field;
    bool seen_seed = false, seen_reps = false, seen_conv = false;
    while (fields >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) {
        throw simulation_error("critical-value cache: malformed header field: " + field);
      }
      const std::string name = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      if (name == "seed") {
        provenance.seed = std::stoull(value);
        seen_seed = true;
      } else if (name == "R") {
        provenance.replications = std::stoi(value);
        seen_reps = true;
      } else if (name == "convention") {
        provenance.convention = quantile_convention_from_string(value);
        seen_conv = true;
      } else if (name == "n") {
        provenance.record_n = std::stoi(value);
      } else if (name == "k") {
        provenance.record_k = std::stoi(value);
      } else {
        throw simulation_error("critical-value cache: unknown header field: " + name);
      }
    }
    if (!seen_seed || !seen_reps || !seen_conv) {
      throw simulation_error("critical-value cache: header must carry seed, R and convention");
    }
  }

  CriticalValueTable table(provenance);
  std::string line;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string n_text, m_text, alpha_text, value_text;
    if (!std::getline(row, n_text, ',') || !std::getline(row, m_text, ',') ||
        !std::getline(row, alpha_text, ',') || !std::getline(row, value_text)) {
      std::ostringstream msg;
      msg << "critical-value cache: malformed row at line " << line_number;
      throw simulation_error(msg.str());
    }
    table.set(std::stoul(n_text), std::stoi(m_text), std::stod(alpha_text),
              std::stod(value_text));
  }
  return table;
}

}  // namespace exptest
