// Acceptance suite: end-to-end checks of the statistic, the analytic
// reference values, the Monte Carlo tables and the dataset pipeline, with
// one pass/fail line per criterion. Returns nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "exptest/commands.hpp"
#include "exptest/datasets.hpp"
#include "exptest/estimators.hpp"
#include "exptest/extropy.hpp"
#include "exptest/simulation.hpp"
#include "reference_formulas.hpp"

using namespace exptest;

namespace {

int failures = 0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void run_criterion(int index, const std::string& name, double budget_seconds,
                   const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& error) {
    outcome.pass = false;
    outcome.detail = std::string("exception: ") + error.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = elapsed < budget_seconds;
  const bool pass = outcome.pass && in_budget;
  if (!pass) ++failures;
  std::printf("[%2d] %s  %-28s (%.1fs/%.0fs)%s%s\n", index, pass ? "PASS" : "FAIL",
              name.c_str(), elapsed, budget_seconds,
              outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
  std::fflush(stdout);
}

std::vector<double> random_exponential(std::size_t n, SplitMix64& stream) {
  std::vector<double> values(n);
  for (double& v : values) v = -std::log1p(-stream.uniform01());
  return values;
}

// ---------------------------------------------------------------------------
// 1. fused vs composed algebraic identity
//
// The relative difference of the regrouped sums is measured against the
// magnitude of the two extropy halves being subtracted. Measuring against
// the (often near-zero) difference itself would turn floating-point noise
// at machine precision into arbitrarily large ratios whenever a sample
// happens to sit close to the null value; the operand scale is the
// well-conditioned yardstick for an identity of this shape.
Outcome fused_composed_identity() {
  SplitMix64 stream(1001);
  double worst = 0.0;        // relative to the subtraction operands
  double worst_classic = 0.0;  // relative to the statistic itself, reported
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 5 + stream.next() % 196;  // N in [5, 200]
    const int m = 1 + static_cast<int>(stream.next() % max_window(n));
    const SortedSample sample = SortedSample::from_raw(random_exponential(n, stream));
    const double fused = delta22_estimate(sample, m).value;
    const double composed = delta_estimate(sample, m, 2, 2).value;
    const double operand_scale = std::fabs(sample_record_extropy(sample, m, 2, 2)) +
                                 std::fabs(sample_extropy(sample, m));
    worst = std::max(worst, std::fabs(fused - composed) / operand_scale);
    worst_classic =
        std::max(worst_classic, std::fabs(fused - composed) /
                                    std::max(std::fabs(fused), std::fabs(composed)));
  }
  Outcome out;
  out.pass = worst < 1e-12;
  std::ostringstream detail;
  detail << "max rel diff " << worst << " vs operand scale (" << worst_classic
         << " vs the statistic itself)";
  out.detail = detail.str();
  return out;
}

// ---------------------------------------------------------------------------
// 2. quadrature vs closed forms for the exponential family
Outcome closed_form_oracles() {
  double worst = 0.0;
  std::string worst_case;
  auto record_gap = [&](double numeric, double exact, const std::string& label) {
    const double gap = std::fabs(numeric - exact);
    if (gap > worst) {
      worst = gap;
      worst_case = label;
    }
  };

  for (double rate : {0.5, 1.0, 2.0}) {
    const Distribution dist = Distribution::exponential(rate);
    record_gap(numeric_extropy(dist), exponential_extropy(rate), "parent");
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= 3; ++k) {
        std::ostringstream label;
        label << "(n=" << n << ",k=" << k << ",rate=" << rate << ")";
        record_gap(numeric_extropy(dist, RecordSpec::upper(n, k)),
                   upper_record_extropy(RecordSpec::upper(n, k), rate),
                   "upper" + label.str());
        record_gap(numeric_extropy(dist, RecordSpec::lower(n, k)),
                   lower_record_extropy(RecordSpec::lower(n, k), rate),
                   "lower" + label.str());
        record_gap(numeric_record_cre(dist, RecordSpec::upper(n, k)),
                   upper_record_cre(RecordSpec::upper(n, k), rate),
                   "cre" + label.str());
      }
      // classical n-th record closed forms (k-record order 1)
      record_gap(numeric_extropy(dist, RecordSpec::upper(n, 1)),
                 testref::classical_upper_record_extropy(n, rate), "classic-upper");
      record_gap(numeric_extropy(dist, RecordSpec::lower(n, 1)),
                 testref::classical_lower_record_extropy(n, rate), "classic-lower");
    }
  }
  Outcome out;
  out.pass = worst <= 1e-8;
  std::ostringstream detail;
  detail << "max abs gap " << worst << " at " << worst_case;
  out.detail = detail.str();
  return out;
}

// ---------------------------------------------------------------------------
// 3. the population delta characterizes exponentiality
Outcome characterization() {
  double worst_null = 0.0;
  for (double rate : {0.5, 1.0, 2.0}) {
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= 3; ++k) {
        worst_null = std::max(
            worst_null,
            std::fabs(population_delta(Distribution::exponential(rate), n, k)));
      }
    }
  }
  const double uniform_delta =
      std::fabs(population_delta(Distribution::uniform(0.0, 1.0), 2, 2));
  Outcome out;
  out.pass = worst_null < 1e-7 && uniform_delta > 1e-3;
  std::ostringstream detail;
  detail << "max |delta| under the null " << worst_null << "; uniform(0,1) delta "
         << uniform_delta;
  out.detail = detail.str();
  return out;
}

// ---------------------------------------------------------------------------
// 4. exact scale equivariance of the estimator
Outcome scale_equivariance() {
  SplitMix64 stream(4004);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 10 + stream.next() % 150;
    const int m = 1 + static_cast<int>(stream.next() % max_window(n));
    const std::vector<double> base = random_exponential(n, stream);
    const double b = 20.0 * (stream.uniform01() - 0.5);
    const double reference = delta22_estimate(SortedSample::from_raw(base), m).value;
    for (double a : {0.1, 2.0, 1000.0}) {
      std::vector<double> scaled(n);
      for (std::size_t i = 0; i < n; ++i) scaled[i] = a * base[i] + b;
      const double transformed =
          delta22_estimate(SortedSample::from_raw(scaled), m).value;
      worst = std::max(worst, std::fabs(transformed - reference / a) /
                                  std::fabs(reference / a));
    }
  }
  Outcome out;
  out.pass = worst < 1e-10;
  std::ostringstream detail;
  detail << "max rel error " << worst;
  out.detail = detail.str();
  return out;
}

// ---------------------------------------------------------------------------
// 5. published critical values
struct CriticalCell {
  std::size_t n;
  int m;
  double alpha;
  double published;
};

Outcome critical_value_reproduction() {
  const CriticalCell cells[] = {
      {20, 5, 0.10, 0.0660},  {50, 10, 0.10, 0.0397}, {100, 24, 0.10, 0.0228},
      {20, 5, 0.05, 0.0820},  {30, 10, 0.05, 0.0550}, {100, 30, 0.05, 0.0225},
      {5, 2, 0.01, 1.3442},   {50, 10, 0.01, 0.0685},
  };
  Outcome out;
  std::ostringstream detail;
  for (const CriticalCell& cell : cells) {
    SimulationConfig config;
    config.sample_size = cell.n;
    config.window = cell.m;
    config.replications = 10000;
    config.master_seed = kDefaultSeed;
    const double computed = critical_value(config, cell.alpha);
    const double tolerance = std::max(0.010, 0.15 * cell.published);
    const bool ok = std::fabs(computed - cell.published) <= tolerance;
    if (!ok) {
      out.pass = false;
      detail << " [N=" << cell.n << ",m=" << cell.m << ",a=" << cell.alpha << ": "
             << computed << " vs " << cell.published << "]";
    }
  }
  out.detail = out.pass ? "all 8 cells within max(0.010, 15%)" : "off" + detail.str();
  return out;
}

// ---------------------------------------------------------------------------
// 6. published power and size values
struct PowerCell {
  std::size_t n;
  int m;
  double alpha;
  bool null_alternative;  // weibull(1,1), i.e. the size rows
  double published;
  double tolerance;
};

Outcome power_reproduction() {
  const PowerCell cells[] = {
      {20, 5, 0.10, false, 0.9805, 0.02},  {50, 10, 0.10, false, 0.9866, 0.02},
      {20, 5, 0.05, false, 0.9648, 0.02},  {100, 15, 0.05, false, 0.9854, 0.02},
      {30, 10, 0.01, false, 0.9998, 0.02}, {50, 10, 0.05, true, 0.0452, 0.012},
      {100, 17, 0.05, true, 0.0501, 0.012},
  };
  Outcome out;
  std::ostringstream detail;
  for (const PowerCell& cell : cells) {
    SimulationConfig null_config;
    null_config.sample_size = cell.n;
    null_config.window = cell.m;
    null_config.replications = 10000;
    null_config.master_seed = kDefaultSeed;
    const double critical = critical_value(null_config, cell.alpha);

    SimulationConfig alt_config = null_config;
    alt_config.master_seed = derive_stream_seed(kDefaultSeed, 0x706f776572ULL);
    const Distribution alternative = cell.null_alternative
                                         ? Distribution::weibull(1.0, 1.0)
                                         : Distribution::uniform(0.0, 1.0);
    const double rate = power(alt_config, alternative, critical).rejection_rate;
    const bool ok = std::fabs(rate - cell.published) <= cell.tolerance;
    if (!ok) {
      out.pass = false;
      detail << " [N=" << cell.n << ",m=" << cell.m << ",a=" << cell.alpha << ","
             << alternative.describe() << ": " << rate << " vs " << cell.published
             << "]";
    }
  }
  out.detail =
      out.pass ? "5 power cells within 0.02, 2 size cells within 0.012" : "off" + detail.str();
  return out;
}

// ---------------------------------------------------------------------------
// 7. size calibration at the recommended windows
Outcome size_calibration() {
  Outcome out;
  std::ostringstream detail;
  for (const std::size_t n : {20u, 50u, 100u}) {
    SimulationConfig null_config;
    null_config.sample_size = n;
    null_config.window = recommend_window(n);
    null_config.replications = 10000;
    null_config.master_seed = kDefaultSeed;
    const double critical = critical_value(null_config, 0.05);

    SimulationConfig alt_config = null_config;
    alt_config.master_seed = derive_stream_seed(kDefaultSeed, 0x73697a65ULL);  // "size"
    const double rate =
        power(alt_config, Distribution::exponential(1.0), critical).rejection_rate;
    detail << " (N=" << n << ",m=" << null_config.window << "): " << rate;
    if (std::fabs(rate - 0.05) > 0.012) out.pass = false;
  }
  out.detail = "null rejection rates" + detail.str();
  return out;
}

// ---------------------------------------------------------------------------
// 8. consistency: the statistic tightens along the recommended schedule
Outcome consistency_shrinkage() {
  double previous = 1e300;
  Outcome out;
  std::ostringstream detail;
  const std::pair<std::size_t, int> schedule[] = {{20, 7}, {50, 16}, {100, 25}};
  for (const auto& [n, m] : schedule) {
    SimulationConfig config;
    config.sample_size = n;
    config.window = m;
    config.replications = 2000;
    config.master_seed = derive_stream_seed(kDefaultSeed, 0x636f6e73ULL);  // "cons"
    std::vector<double> stats = simulate_delta(Distribution::exponential(1.0), config);
    for (double& v : stats) v = std::fabs(v);
    const double median = empirical_quantile(std::move(stats), 0.5);
    detail << " (N=" << n << ",m=" << m << "): " << median;
    if (median >= previous) out.pass = false;
    previous = median;
  }
  out.detail = "median |delta|" + detail.str();
  return out;
}

// ---------------------------------------------------------------------------
// 9. dataset decisions vs the published analysis
Outcome dataset_decisions() {
  const bool expect_reject[7] = {false, true, true, false, false, true, true};
  Outcome out;
  std::ostringstream detail;
  const auto& datasets = builtin_datasets();
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    const Dataset& dataset = datasets[i];
    const TestReport report = bootstrap_test(dataset.values, dataset.default_window,
                                             0.05, 10000, kDefaultSeed);
    const bool rejected = report.decision == Decision::reject_exponentiality;
    const bool ok = rejected == expect_reject[i];
    if (!ok) out.pass = false;
    detail << "\n      " << dataset.name << " (N=" << dataset.size() << ", m="
           << dataset.default_window << "): statistic " << report.statistic.value
           << " vs published " << *dataset.reference_statistic << "; p "
           << report.p_value << " vs published " << *dataset.reference_p_value
           << "; " << (rejected ? "reject" : "fail-to-reject")
           << (ok ? "" : "  <-- decision differs from the published analysis");
  }
  out.detail = "computed vs published, side by side:" + detail.str();
  return out;
}

// ---------------------------------------------------------------------------
// 10. hand-derived unit values, cross-checked against the naive transcription
Outcome hand_derived_values() {
  const std::vector<double> data{1, 2, 3, 4, 5};
  const SortedSample sample = SortedSample::from_sorted(data);
  const double extropy = sample_extropy(sample, 1);
  const double delta = delta22_estimate(sample, 1).value;

  const double extropy_ref = testref::sample_extropy(data, 1);
  const double delta_ref = testref::delta22(data, 1);

  Outcome out;
  out.pass = std::fabs(extropy - (-0.1)) < 1e-12 &&
             std::fabs(delta - (-0.076581)) < 1e-5 &&
             std::fabs(extropy - extropy_ref) < 1e-14 &&
             std::fabs(delta - delta_ref) < 1e-14;
  std::ostringstream detail;
  detail << "extropy " << extropy << " (target -0.1), delta " << delta
         << " (target -0.076581 +/- 1e-5), transcription gaps "
         << std::fabs(extropy - extropy_ref) << ", " << std::fabs(delta - delta_ref);
  out.detail = detail.str();
  return out;
}

}  // namespace

struct Criterion {
  int index;
  const char* name;
  double budget_seconds;
  Outcome (*body)();
};

const Criterion kCriteria[] = {
    {1, "fused/composed identity", 5.0, fused_composed_identity},
    {2, "closed-form oracles", 30.0, closed_form_oracles},
    {3, "characterization", 30.0, characterization},
    {4, "scale equivariance", 5.0, scale_equivariance},
    {5, "critical-value tables", 180.0, critical_value_reproduction},
    {6, "power and size tables", 300.0, power_reproduction},
    {7, "null size calibration", 300.0, size_calibration},
    {8, "consistency shrinkage", 120.0, consistency_shrinkage},
    {9, "dataset decisions", 120.0, dataset_decisions},
    {10, "hand-derived values", 5.0, hand_derived_values},
};

int main(int argc, char** argv) {
  std::optional<int> only;
  if (argc > 1) only = std::atoi(argv[1]);
  if (!only) {
    std::printf("acceptance suite (R = 10000 where applicable, seed = %llu)\n",
                static_cast<unsigned long long>(kDefaultSeed));
  }
  int executed = 0;
  for (const Criterion& criterion : kCriteria) {
    if (only && *only != criterion.index) continue;
    run_criterion(criterion.index, criterion.name, criterion.budget_seconds,
                  criterion.body);
    ++executed;
  }
  if (executed == 0) {
    std::fprintf(stderr, "unknown criterion index %d (valid: 1..10)\n", *only);
    return 2;
  }
  if (!only) {
    if (failures == 0) {
      std::printf("acceptance: all 10 criteria passed\n");
    } else {
      std::printf("acceptance: %d of 10 criteria FAILED\n", failures);
    }
  }
  return failures == 0 ? 0 : 1;
}
