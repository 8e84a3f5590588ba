#include "exptest/records.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace exptest {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Probability that the record has not yet occurred by "base level" p, where
// p is the survival (upper records) or cdf (lower records) at x:
//   p^k * sum_{i=0}^{n-1} (-k log p)^i / i!
// Evaluated term-by-term in log space so large hazards underflow cleanly
// instead of producing 0 * inf.
double record_tail_sum(double p, int n, int k) {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const double hazard = -std::log(p);
  double sum = 0.0;
  const double log_khaz = std::log(static_cast<double>(k) * hazard);
  for (int i = 0; i < n; ++i) {
    sum += std::exp(static_cast<double>(k) * std::log(p) +
                    static_cast<double>(i) * log_khaz - std::lgamma(i + 1.0));
  }
  return sum;
}
}  // namespace

RecordSpec RecordSpec::make(int n, int k, RecordOrientation orientation) {
  if (n < 1 || k < 1) throw std::domain_error("RecordSpec: n and k must be >= 1");
  return RecordSpec{n, k, orientation};
}

double record_pdf(const Distribution& dist, const RecordSpec& spec, double x) {
  if (x < dist.support_lower() || x > dist.support_upper()) return 0.0;

  const double f = dist.pdf(x);
  const bool upper = spec.orientation == RecordOrientation::upper;
  const double base = upper ? dist.survival(x) : dist.cdf(x);

  const int n = spec.n;
  const int k = spec.k;
  if (n == 1 && k == 1) return f;

  if (base >= 1.0) {
    // Hazard factor vanishes: removable zero for n >= 2. For n = 1 the
    // density reduces to k * base^(k-1) * f, i.e. k * f at this boundary.
    return n >= 2 ? 0.0 : k * f;
  }
  if (base <= 0.0) {
    if (k >= 2) return 0.0;       // power factor wins over the log divergence
    return f > 0.0 ? kInf : 0.0;  // k = 1, n >= 2: true divergence when f > 0
  }

  const double hazard = -std::log(base);
  const double prefactor = std::exp(n * std::log(static_cast<double>(k)) - std::lgamma(n));
  return prefactor * std::pow(hazard, n - 1) * std::pow(base, k - 1) * f;
}

double record_cdf(const Distribution& dist, const RecordSpec& spec, double x) {
  if (x < dist.support_lower()) return 0.0;
  if (x > dist.support_upper()) return 1.0;

  if (spec.orientation == RecordOrientation::upper) {
    return 1.0 - record_tail_sum(dist.survival(x), spec.n, spec.k);
  }
  return record_tail_sum(dist.cdf(x), spec.n, spec.k);
}

}  // namespace exptest
