#pragma once

#include <string>

namespace exptest {

// Parametric model used both as the null family (exponential) and as the
// alternatives of the power study (uniform, Weibull).
//
// Conventions:
//   exponential(rate):    pdf rate*exp(-rate*x) on [0, inf)
//   uniform(lo, hi):      flat on [lo, hi]
//   weibull(shape,scale): cdf 1 - exp(-(x/scale)^shape) on [0, inf),
//                         so weibull(1, 1) coincides with exponential(1).
class Distribution {
 public:
  enum class Family { exponential, uniform, weibull };

  static Distribution exponential(double rate);
  static Distribution uniform(double lo, double hi);
  static Distribution weibull(double shape, double scale);

  Family family() const { return family_; }

  double pdf(double x) const;
  double cdf(double x) const;
  // survival(x) == 1 - cdf(x); computed directly for tail accuracy.
  double survival(double x) const;
  // Inverse cdf; u must lie in [0, 1). Doubles as the sampling transform.
  double quantile(double u) const;

  double support_lower() const;
  double support_upper() const;  // +inf for exponential / weibull

  std::string describe() const;

 private:
  Distribution(Family family, double a, double b) : family_(family), a_(a), b_(b) {}

  Family family_;
  double a_;  // rate | lo | shape
  double b_;  // unused | hi | scale
};

}  // namespace exptest
