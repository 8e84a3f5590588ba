#include "exptest/extropy.hpp"

#include <cmath>
#include <stdexcept>

#include "exptest/quadrature.hpp"

namespace exptest {

namespace {

void require_rate(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::domain_error("extropy: rate must be positive");
  }
}

void require_record(int n, int k) {
  if (n < 1 || k < 1) throw std::domain_error("extropy: record n and k must be >= 1");
}

// Truncation point for integrals over an unbounded support: doubles from the
// distribution's own scale until the record tail mass is negligible. The
// integrands used here are bounded beyond that point, so the discarded tail
// contributes well below the quadrature tolerance.
double upper_cutoff(const Distribution& dist, const RecordSpec& spec,
                    double tail_mass) {
  double t = dist.quantile(0.5) + 1.0;
  for (int step = 0; step < 300; ++step) {
    if (record_survival(dist, spec, t) < tail_mass) return t;
    t *= 2.0;
  }
  throw quadrature_error("extropy: could not locate a negligible tail");
}

}  // namespace

double exponential_extropy(double rate) {
  require_rate(rate);
  return -rate / 4.0;
}

double record_extropy_coefficient(int n, int k) {
  require_record(n, k);
  const double log_coeff = std::log(static_cast<double>(k)) +
                           std::lgamma(2.0 * n - 1.0) -
                           (2.0 * n - 2.0) * std::log(2.0) - 2.0 * std::lgamma(n);
  return std::exp(log_coeff);
}

double upper_record_extropy(const RecordSpec& spec, double rate) {
  require_rate(rate);
  return record_extropy_coefficient(spec.n, spec.k) * (-rate / 4.0);
}

double lower_record_extropy(const RecordSpec& spec, double rate) {
  require_rate(rate);
  const double base = record_extropy_coefficient(spec.n, spec.k) * (-rate / 4.0);
  const double ratio = 2.0 * spec.k / (2.0 * spec.k - 1.0);
  return base * (std::pow(ratio, 2 * spec.n - 1) - 1.0);
}

double upper_record_cre(const RecordSpec& spec, double rate) {
  require_rate(rate);
  require_record(spec.n, spec.k);
  double sum = 0.0;
  for (int i = 0; i < spec.n; ++i) {
    for (int j = 0; j < spec.n; ++j) {
      sum += std::exp(std::lgamma(i + j + 1.0) - std::lgamma(i + 1.0) -
                      std::lgamma(j + 1.0) - (i + j) * std::log(2.0));
    }
  }
  return -sum / (4.0 * rate * spec.k);
}

double numeric_extropy(const Distribution& dist,
                       const std::optional<RecordSpec>& spec) {
  const double lo = dist.support_lower();
  double hi = dist.support_upper();
  if (!std::isfinite(hi)) {
    const RecordSpec tail_spec = spec ? *spec : RecordSpec::upper(1, 1);
    hi = upper_cutoff(dist, tail_spec, 1e-13);
  }
  auto density_squared = [&](double x) {
    const double g = spec ? record_pdf(dist, *spec, x) : dist.pdf(x);
    return g * g;
  };
  return -0.5 * integrate(density_squared, lo, hi, 1e-10).value;
}

double numeric_record_cre(const Distribution& dist, const RecordSpec& spec) {
  const double lo = dist.support_lower();
  double hi = dist.support_upper();
  if (!std::isfinite(hi)) {
    // The squared survival tail decays like the record tail itself, so a
    // stricter mass threshold keeps the truncation error below tolerance.
    hi = upper_cutoff(dist, spec, 1e-10);
    hi *= 2.0;
  }
  auto survival_squared = [&](double x) {
    const double s = record_survival(dist, spec, x);
    return s * s;
  };
  return -0.5 * integrate(survival_squared, lo, hi, 1e-10).value;
}

double population_delta(const Distribution& dist, int n, int k) {
  require_record(n, k);
  const double record_part = numeric_extropy(dist, RecordSpec::upper(n, k));
  const double parent_part = numeric_extropy(dist);
  return record_part - record_extropy_coefficient(n, k) * parent_part;
}

}  // namespace exptest
