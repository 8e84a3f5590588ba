#pragma once

#include <optional>

#include "exptest/distribution.hpp"
#include "exptest/records.hpp"

namespace exptest {

// Extropy and related functionals. Extropy of a density f is
//   J(X) = -1/2 * integral of f(x)^2 dx,
// strictly negative for every absolutely continuous distribution. The
// cumulative residual extropy (CRE) replaces f by the survival function.
//
// Closed forms below hold for the exponential family; the *_numeric
// functions evaluate the defining integral by adaptive quadrature for any
// supported distribution and serve as the cross-check.

// J(X) for X ~ exponential(rate): exactly -rate/4.
double exponential_extropy(double rate);

// k * Gamma(2n-1) / (2^(2n-2) * Gamma(n)^2), the proportionality constant
// linking the extropy of the n-th upper k-record of an exponential parent
// to the parent's extropy. Evaluated through log-gamma so n up to 30 does
// not overflow. Equals 1 at (n,k) = (1,1) and (2,2), and 1/2 at (2,1).
double record_extropy_coefficient(int n, int k);

// J(U_{n,k}) for an exponential(rate) parent:
//   -rate * k * Gamma(2n-1) / (2^(2n) * Gamma(n)^2)
//   == record_extropy_coefficient(n,k) * exponential_extropy(rate).
double upper_record_extropy(const RecordSpec& spec, double rate);

// J(L_{n,k}) for an exponential(rate) parent:
//   -rate * k * Gamma(2n-1) / (2^(2n) * Gamma(n)^2) * ((2k/(2k-1))^(2n-1) - 1)
double lower_record_extropy(const RecordSpec& spec, double rate);

// CRE of U_{n,k} for an exponential(rate) parent:
//   -1/(4*rate*k) * sum_{i,j=0}^{n-1} (i+j)!/(i! j!) * (1/2)^(i+j)
double upper_record_cre(const RecordSpec& spec, double rate);

// J by adaptive quadrature of the (record) density; absolute accuracy
// around 1e-9 against the closed forms. Without a record spec this is the
// parent extropy. Throws quadrature_error when the integral cannot be
// resolved (for example a non-square-integrable density).
double numeric_extropy(const Distribution& dist,
                       const std::optional<RecordSpec>& spec = std::nullopt);

// CRE by adaptive quadrature of the squared record survival function.
double numeric_record_cre(const Distribution& dist, const RecordSpec& spec);

// Population value of the test statistic:
//   Delta_{n,k} = J(U_{n,k}) - record_extropy_coefficient(n,k) * J(X),
// identically zero precisely when `dist` is exponential.
double population_delta(const Distribution& dist, int n, int k);

}  // namespace exptest
