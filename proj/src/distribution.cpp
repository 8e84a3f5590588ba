#include "exptest/distribution.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace exptest {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}
}  // namespace

Distribution Distribution::exponential(double rate) {
  require(std::isfinite(rate) && rate > 0.0, "exponential: rate must be positive");
  return Distribution(Family::exponential, rate, 0.0);
}

Distribution Distribution::uniform(double lo, double hi) {
  require(std::isfinite(lo) && std::isfinite(hi) && lo < hi,
          "uniform: endpoints must be finite with lo < hi");
  return Distribution(Family::uniform, lo, hi);
}

Distribution Distribution::weibull(double shape, double scale) {
  require(std::isfinite(shape) && shape > 0.0, "weibull: shape must be positive");
  require(std::isfinite(scale) && scale > 0.0, "weibull: scale must be positive");
  return Distribution(Family::weibull, shape, scale);
}

double Distribution::pdf(double x) const {
  switch (family_) {
    case Family::exponential:
      return x < 0.0 ? 0.0 : a_ * std::exp(-a_ * x);
    case Family::uniform:
      return (x < a_ || x > b_) ? 0.0 : 1.0 / (b_ - a_);
    case Family::weibull: {
      if (x < 0.0) return 0.0;
      if (x == 0.0) {
        // Density at the origin: shape 1 is the exponential case, shape < 1
        // diverges; report the one-sided limit.
        if (a_ == 1.0) return 1.0 / b_;
        return a_ > 1.0 ? 0.0 : kInf;
      }
      const double t = std::pow(x / b_, a_);
      return (a_ / b_) * std::pow(x / b_, a_ - 1.0) * std::exp(-t);
    }
  }
  return 0.0;
}

double Distribution::cdf(double x) const {
  switch (family_) {
    case Family::exponential:
      return x < 0.0 ? 0.0 : -std::expm1(-a_ * x);
    case Family::uniform:
      if (x < a_) return 0.0;
      if (x > b_) return 1.0;
      return (x - a_) / (b_ - a_);
    case Family::weibull:
      return x < 0.0 ? 0.0 : -std::expm1(-std::pow(x / b_, a_));
  }
  return 0.0;
}

double Distribution::survival(double x) const {
  switch (family_) {
    case Family::exponential:
      return x < 0.0 ? 1.0 : std::exp(-a_ * x);
    case Family::uniform:
      if (x < a_) return 1.0;
      if (x > b_) return 0.0;
      return (b_ - x) / (b_ - a_);
    case Family::weibull:
      return x < 0.0 ? 1.0 : std::exp(-std::pow(x / b_, a_));
  }
  return 0.0;
}

double Distribution::quantile(double u) const {
  require(u >= 0.0 && u < 1.0, "quantile: u must lie in [0, 1)");
  switch (family_) {
    case Family::exponential:
      return -std::log1p(-u) / a_;
    case Family::uniform:
      return a_ + u * (b_ - a_);
    case Family::weibull:
      return b_ * std::pow(-std::log1p(-u), 1.0 / a_);
  }
  return 0.0;
}

double Distribution::support_lower() const {
  return family_ == Family::uniform ? a_ : 0.0;
}

double Distribution::support_upper() const {
  return family_ == Family::uniform ? b_ : kInf;
}

std::string Distribution::describe() const {
  std::ostringstream out;
  switch (family_) {
    case Family::exponential:
      out << "exponential(rate=" << a_ << ")";
      break;
    case Family::uniform:
      out << "uniform(" << a_ << "," << b_ << ")";
      break;
    case Family::weibull:
      out << "weibull(shape=" << a_ << ",scale=" << b_ << ")";
      break;
  }
  return out.str();
}

}  // namespace exptest
