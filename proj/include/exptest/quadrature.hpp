#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace exptest {

class quadrature_error : public std::runtime_error {
 public:
  explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

// Globally adaptive Gauss quadrature on [lo, hi]: each interval is scored by
// the difference between 7- and 15-point Gauss rules and the worst interval
// is bisected until the summed estimate drops below abs_tol. All nodes are
// interior, so integrable endpoint singularities (log powers at a support
// boundary) are handled without special casing.
//
// Throws quadrature_error with diagnostics if the tolerance is not reached
// within max_intervals or the integrand produces non-finite values.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double abs_tol = 1e-11,
                           int max_intervals = 20000);

}  // namespace exptest
