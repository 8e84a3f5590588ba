#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace exptest {

// A window-spanning tie makes every spacing-based estimator infinite; the
// estimators refuse to evaluate instead of returning +/-inf.
class degenerate_sample_error : public std::runtime_error {
 public:
  degenerate_sample_error(std::size_t order_index, int window);
  std::size_t order_index() const { return order_index_; }

 private:
  std::size_t order_index_;
};

// Ascending order statistics of a raw sample; the substrate every estimator
// works on. Requires at least 3 finite observations. Negative values are
// allowed here (affine-transformed samples are legitimate inputs); the
// exponentiality-test entry points enforce non-negativity themselves.
class SortedSample {
 public:
  static SortedSample from_raw(std::vector<double> values);
  // For inputs already in ascending order (validated, not re-sorted).
  static SortedSample from_sorted(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }

  // Order statistic by 1-based rank, clamped to [1, N] — the convention the
  // spacing definition below relies on.
  double order_statistic(long rank) const;

  // X_{min(i+m,N)} - X_{max(i-m,1)} for 1-based rank i; always >= 0.
  double window_spacing(std::size_t i, int window) const;

 private:
  explicit SortedSample(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

// Largest admissible window for a sample of size N (window < N/2).
int max_window(std::size_t sample_size);

// Edge-correction weights c_1..c_N for the spacing estimator: ramp 1 -> 2
// over the first m ranks, constant 2 in the middle, ramp back down. Their
// total mass is 2N - m - 1.
std::vector<double> edge_weights(std::size_t sample_size, int window);

// Spacing estimator of the parent extropy J(X):
//   -1/(2N) * sum_i c_i * (m/N) / (X_{i+m:N} - X_{i-m:N})
double sample_extropy(const SortedSample& sample, int window);

// Spacing estimator of the record extropy J(U_{n,k}):
//   -k^(2n)/(2N Gamma(n)^2) * sum_i (log(1 - i/(N+1)))^(2n-2)
//                                   * (1 - i/(N+1))^(2k-2)
//                                   * (2m/N) / (X_{i+m:N} - X_{i-m:N})
double sample_record_extropy(const SortedSample& sample, int window, int n, int k);

// The test statistic together with the settings that produced it.
struct DeltaStatistic {
  double value;
  int n;
  int k;
  int window;
  std::size_t sample_size;
};

// Composed estimator: sample_record_extropy minus the record coefficient
// times sample_extropy. The coefficient is 1 at (n,k) = (2,2) and e.g. 1/2
// at (2,1).
DeltaStatistic delta_estimate(const SortedSample& sample, int window, int n, int k);

// Single-pass form of the (2,2) statistic:
//   -1/(2N) * sum_i {32 (log(1-i/(N+1)))^2 (1-i/(N+1))^2 - c_i}
//                 * (m/N) / (X_{i+m:N} - X_{i-m:N})
// Algebraically identical to delta_estimate(sample, window, 2, 2); kept as
// the production route because the published tables are built on it.
DeltaStatistic delta22_estimate(const SortedSample& sample, int window);

}  // namespace exptest
