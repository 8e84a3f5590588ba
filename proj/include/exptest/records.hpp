#pragma once

#include "exptest/distribution.hpp"

namespace exptest {

enum class RecordOrientation { upper, lower };

// Selects the n-th value of the k-record sequence of an iid stream.
// n = 1, k = 1 is the first observation itself.
struct RecordSpec {
  int n;  // record index, >= 1
  int k;  // record order, >= 1
  RecordOrientation orientation = RecordOrientation::upper;

  static RecordSpec upper(int n, int k) { return make(n, k, RecordOrientation::upper); }
  static RecordSpec lower(int n, int k) { return make(n, k, RecordOrientation::lower); }

 private:
  static RecordSpec make(int n, int k, RecordOrientation orientation);
};

// Density of the selected record value under `dist`.
//
// Upper records: k^n / Gamma(n) * (-log S(x))^(n-1) * S(x)^(k-1) * f(x)
// with S the survival function; lower records swap S for the cdf.
// Zero outside the parent support; at a support endpoint where the
// logarithmic factor is indeterminate the (well-defined) limit is returned.
double record_pdf(const Distribution& dist, const RecordSpec& spec, double x);

// Distribution function of the selected record value (partial Poisson sum
// in the cumulative hazard). Monotone in x with limits 0 and 1.
double record_cdf(const Distribution& dist, const RecordSpec& spec, double x);

inline double record_survival(const Distribution& dist, const RecordSpec& spec, double x) {
  return 1.0 - record_cdf(dist, spec, x);
}

}  // namespace exptest
