#include "exptest/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "exptest/extropy.hpp"

namespace exptest {

namespace {

void validate_window(std::size_t sample_size, int window) {
  if (window < 1 || 2 * static_cast<std::size_t>(window) >= sample_size) {
    std::ostringstream msg;
    msg << "window m=" << window << " out of range for N=" << sample_size
        << " (need 1 <= m < N/2)";
    throw std::domain_error(msg.str());
  }
}

double checked_spacing(const SortedSample& sample, std::size_t i, int window) {
  const double spacing = sample.window_spacing(i, window);
  if (spacing <= 0.0) throw degenerate_sample_error(i, window);
  return spacing;
}

}  // namespace

degenerate_sample_error::degenerate_sample_error(std::size_t order_index, int window)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << "degenerate sample: zero spacing around order statistic i="
            << order_index << " (ties span the whole window m=" << window
            << "); a larger window may separate the ties";
        return msg.str();
      }()),
      order_index_(order_index) {}

SortedSample SortedSample::from_raw(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return from_sorted(std::move(values));
}

SortedSample SortedSample::from_sorted(std::vector<double> values) {
  if (values.size() < 3) {
    throw std::invalid_argument("sample must contain at least 3 observations");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw std::invalid_argument("sample contains a non-finite observation");
    }
    if (i > 0 && values[i] < values[i - 1]) {
      throw std::invalid_argument("from_sorted: values are not ascending");
    }
  }
  return SortedSample(std::move(values));
}

double SortedSample::order_statistic(long rank) const {
  const long n = static_cast<long>(values_.size());
  rank = std::clamp(rank, 1L, n);
  return values_[static_cast<std::size_t>(rank - 1)];
}

double SortedSample::window_spacing(std::size_t i, int window) const {
  const long rank = static_cast<long>(i);
  return order_statistic(rank + window) - order_statistic(rank - window);
}

int max_window(std::size_t sample_size) {
  return static_cast<int>((sample_size - 1) / 2);
}

std::vector<double> edge_weights(std::size_t sample_size, int window) {
  validate_window(sample_size, window);
  const double m = window;
  std::vector<double> weights(sample_size);
  for (std::size_t i = 1; i <= sample_size; ++i) {
    double c = 2.0;
    if (i <= static_cast<std::size_t>(window)) {
      c = 1.0 + (i - 1) / m;
    } else if (i > sample_size - static_cast<std::size_t>(window)) {
      c = 1.0 + (sample_size - i) / m;
    }
    weights[i - 1] = c;
  }
  return weights;
}

namespace {

// Both estimators, and their difference in delta_estimate, accumulate in
// long double; the subtraction happens before the final rounding so the
// composed route agrees with the fused one even when the statistic is
// orders of magnitude smaller than its two halves.
long double extropy_sum(const SortedSample& sample, int window) {
  const std::size_t n = sample.size();
  const std::vector<double> weights = edge_weights(n, window);
  const double m_over_n = static_cast<double>(window) / static_cast<double>(n);
  long double sum = 0.0L;
  for (std::size_t i = 1; i <= n; ++i) {
    sum += weights[i - 1] * m_over_n / checked_spacing(sample, i, window);
  }
  return -sum / (2.0L * static_cast<long double>(n));
}

long double record_extropy_sum(const SortedSample& sample, int window, int n, int k) {
  const std::size_t size = sample.size();
  if (n < 1 || k < 1) throw std::domain_error("record n and k must be >= 1");
  const double two_m_over_n = 2.0 * window / static_cast<double>(size);
  long double sum = 0.0L;
  for (std::size_t i = 1; i <= size; ++i) {
    const double tail = 1.0 - static_cast<double>(i) / (size + 1.0);
    const double log_tail = std::log(tail);
    const double weight =
        std::pow(log_tail, 2 * n - 2) * std::pow(tail, 2 * k - 2);
    sum += weight * two_m_over_n / checked_spacing(sample, i, window);
  }
  const double prefactor =
      std::exp(2.0 * n * std::log(static_cast<double>(k)) - 2.0 * std::lgamma(n));
  return -(static_cast<long double>(prefactor) /
           (2.0L * static_cast<long double>(size))) *
         sum;
}

}  // namespace

double sample_extropy(const SortedSample& sample, int window) {
  validate_window(sample.size(), window);
  return static_cast<double>(extropy_sum(sample, window));
}

double sample_record_extropy(const SortedSample& sample, int window, int n, int k) {
  validate_window(sample.size(), window);
  return static_cast<double>(record_extropy_sum(sample, window, n, k));
}

DeltaStatistic delta_estimate(const SortedSample& sample, int window, int n, int k) {
  validate_window(sample.size(), window);
  const long double record_part = record_extropy_sum(sample, window, n, k);
  const long double parent_part = extropy_sum(sample, window);
  const long double coefficient = record_extropy_coefficient(n, k);
  const double value = static_cast<double>(record_part - coefficient * parent_part);
  return DeltaStatistic{value, n, k, window, sample.size()};
}

DeltaStatistic delta22_estimate(const SortedSample& sample, int window) {
  const std::size_t n = sample.size();
  validate_window(n, window);
  const std::vector<double> weights = edge_weights(n, window);
  const double m_over_n = static_cast<double>(window) / static_cast<double>(n);
  long double sum = 0.0L;
  for (std::size_t i = 1; i <= n; ++i) {
    const double tail = 1.0 - static_cast<double>(i) / (n + 1.0);
    const double log_tail = std::log(tail);
    const double fused =
        32.0 * log_tail * log_tail * tail * tail - weights[i - 1];
    sum += fused * m_over_n / checked_spacing(sample, i, window);
  }
  const double value =
      static_cast<double>(-sum / (2.0L * static_cast<long double>(n)));
  return DeltaStatistic{value, 2, 2, window, n};
}

}  // namespace exptest
