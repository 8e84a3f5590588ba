#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "exptest/distribution.hpp"
#include "exptest/estimators.hpp"
#include "exptest/rng.hpp"

namespace exptest {

class simulation_error : public std::runtime_error {
 public:
  explicit simulation_error(const std::string& what) : std::runtime_error(what) {}
};

// How the critical value is read off the simulated |Delta| distribution.
// one_sided takes the empirical quantile at level 1-alpha; two_sided_style
// takes 1-alpha/2. The published tables correspond to one_sided, which is
// therefore the default; two_sided_style is kept selectable.
enum class QuantileConvention { one_sided, two_sided_style };

const char* to_string(QuantileConvention convention);
QuantileConvention quantile_convention_from_string(const std::string& name);

constexpr std::uint64_t kDefaultSeed = 20240808ULL;

struct SimulationConfig {
  std::size_t sample_size = 20;             // N
  int window = 5;                           // m, must satisfy m < N/2
  int replications = 10000;                 // R
  std::uint64_t master_seed = kDefaultSeed;
  QuantileConvention convention = QuantileConvention::one_sided;
  int record_n = 2;
  int record_k = 2;
  int threads = 0;  // 0 = one worker per hardware thread

  void validate() const;  // throws simulation_error
};

// Level actually handed to the empirical quantile for significance alpha.
double quantile_level(QuantileConvention convention, double alpha);

// Empirical quantile of a sample: ascending order, value at 1-based index
// ceil(q * R). Input is copied and sorted.
double empirical_quantile(std::vector<double> values, double level);

// N inverse-cdf draws from `dist` on the given replication stream.
std::vector<double> sample_from(const Distribution& dist, std::size_t count,
                                SplitMix64& stream);

// One Delta statistic per replication, indexed by replication number so the
// result is identical however many worker threads run. Degenerate
// replications (a tie spanning the whole window) are recorded as NaN.
std::vector<double> simulate_delta(const Distribution& dist,
                                   const SimulationConfig& config);

// |Delta| replications under the exponential(1) null, degenerate
// replications excluded (more than 1% of them is an error). The raw
// material critical values are read from; one run serves any number of
// significance levels.
std::vector<double> simulate_null_abs_delta(const SimulationConfig& config);

// Monte Carlo critical value for |Delta_{n,k}| under the exponential(1)
// null at significance alpha. Deterministic in (config, seed).
double critical_value(const SimulationConfig& config, double alpha);

struct PowerResult {
  double rejection_rate = 0.0;
  int rejections = 0;
  int effective_replications = 0;
  int degenerate_count = 0;
};

// Fraction of replications from `alternative` whose |Delta| exceeds the
// critical value. Degenerate replications are excluded from the
// denominator; more than 5% of them is an error.
PowerResult power(const SimulationConfig& config, const Distribution& alternative,
                  double critical);

enum class Decision { reject_exponentiality, fail_to_reject };

struct TestReport {
  DeltaStatistic statistic;
  double lambda_hat = 0.0;  // fitted rate, 1 / sample mean
  double p_value = 1.0;
  double alpha = 0.05;
  Decision decision = Decision::fail_to_reject;
  int replications = 0;
  std::uint64_t master_seed = 0;
  int degenerate_count = 0;
};

// Parametric-bootstrap exponentiality test: fit rate = 1/mean, simulate R
// samples from the fitted exponential, and report
//   p = (1 + #{|Delta_sim| >= |Delta_obs|}) / (R + 1).
// Data must be non-negative with positive mean.
TestReport bootstrap_test(std::span<const double> data, int window, double alpha,
                          int replications, std::uint64_t seed, int record_n = 2,
                          int record_k = 2);

// Window size recommendation by sample size, clamped below N/2.
int recommend_window(std::size_t sample_size);

// Persistent critical-value store, one file per (seed, R, convention, n, k)
// configuration:
//   # seed=<u64> R=<int> convention=<name> n=<int> k=<int>
//   N,m,alpha,critical_value          (6 significant digits)
// Rows from a file whose header does not match the requested configuration
// are ignored rather than reused.
class CriticalValueTable {
 public:
  struct Provenance {
    std::uint64_t seed = kDefaultSeed;
    int replications = 10000;
    QuantileConvention convention = QuantileConvention::one_sided;
    int record_n = 2;
    int record_k = 2;

    bool operator==(const Provenance&) const = default;
  };

  explicit CriticalValueTable(Provenance provenance) : provenance_(provenance) {}

  const Provenance& provenance() const { return provenance_; }

  std::optional<double> find(std::size_t sample_size, int window, double alpha) const;
  void set(std::size_t sample_size, int window, double alpha, double critical);
  std::size_t size() const { return entries_.size(); }

  void save(std::ostream& out) const;
  // Parses a cache stream; returns the table it contains.
  static CriticalValueTable load(std::istream& in);

 private:
  using Key = std::tuple<std::size_t, int, std::string>;  // N, m, alpha text
  static std::string alpha_key(double alpha);

  Provenance provenance_;
  std::map<Key, double> entries_;
};

}  // namespace exptest
