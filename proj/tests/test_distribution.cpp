#include "exptest/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

using exptest::Distribution;

namespace {
const std::vector<Distribution> kModels{
    Distribution::exponential(1.0),   Distribution::exponential(0.5),
    Distribution::exponential(4.0),   Distribution::uniform(0.0, 1.0),
    Distribution::uniform(-2.0, 3.0), Distribution::weibull(2.0, 1.5),
    Distribution::weibull(0.8, 2.0)};
}

TEST_CASE("quantile inverts the cdf") {
  for (const Distribution& dist : kModels) {
    for (double u = 0.02; u < 1.0; u += 0.07) {
      const double x = dist.quantile(u);
      CHECK(std::fabs(dist.cdf(x) - u) < 1e-10);
    }
  }
}

TEST_CASE("survival complements the cdf") {
  for (const Distribution& dist : kModels) {
    for (double u = 0.01; u < 1.0; u += 0.05) {
      const double x = dist.quantile(u);
      CHECK(std::fabs(dist.survival(x) - (1.0 - dist.cdf(x))) < 1e-12);
    }
  }
}

TEST_CASE("pdf is nonnegative and vanishes outside the support") {
  for (const Distribution& dist : kModels) {
    for (double u = 0.01; u < 1.0; u += 0.05) {
      CHECK(dist.pdf(dist.quantile(u)) >= 0.0);
    }
    CHECK(dist.pdf(dist.support_lower() - 1.0) == 0.0);
  }
  const Distribution uniform = Distribution::uniform(0.0, 1.0);
  CHECK(uniform.pdf(1.5) == 0.0);
  CHECK(uniform.pdf(0.5) == 1.0);
}

TEST_CASE("exponential inverse cdf values") {
  const Distribution exp1 = Distribution::exponential(1.0);
  CHECK(exp1.quantile(0.5) == doctest::Approx(0.6931471805599453).epsilon(1e-12));
  CHECK(exp1.quantile(0.0) == 0.0);

  // Same uniform input, same draw: weibull(1,1) is exponential(1).
  const Distribution w11 = Distribution::weibull(1.0, 1.0);
  for (double u = 0.05; u < 1.0; u += 0.1) {
    CHECK(w11.quantile(u) == doctest::Approx(exp1.quantile(u)).epsilon(1e-14));
  }

  const Distribution unit = Distribution::uniform(0.0, 1.0);
  CHECK(unit.quantile(0.37) == 0.37);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(Distribution::exponential(0.0), std::domain_error);
  CHECK_THROWS_AS(Distribution::exponential(-1.0), std::domain_error);
  CHECK_THROWS_AS(Distribution::uniform(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(Distribution::uniform(2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(Distribution::weibull(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(Distribution::weibull(1.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(Distribution::exponential(1.0).quantile(1.0), std::domain_error);
}

TEST_CASE("describe names the family and parameters") {
  CHECK(Distribution::exponential(1.0).describe() == "exponential(rate=1)");
  CHECK(Distribution::weibull(1.0, 1.0).describe() == "weibull(shape=1,scale=1)");
}
