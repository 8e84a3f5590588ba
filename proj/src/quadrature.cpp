#include "exptest/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace exptest {

namespace {

struct GaussRule {
  std::vector<double> nodes;    // in (-1, 1)
  std::vector<double> weights;
};

// Nodes/weights of the order-n Gauss-Legendre rule via Newton iteration on
// the Legendre recurrence; accurate to machine precision for the small n
// used here.
GaussRule make_gauss_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

const GaussRule& gauss7() {
  static const GaussRule rule = make_gauss_rule(7);
  return rule;
}

const GaussRule& gauss15() {
  static const GaussRule rule = make_gauss_rule(15);
  return rule;
}

double apply_rule(const GaussRule& rule, const std::function<double(double)>& f,
                  double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

struct Segment {
  double lo, hi;
  double value;   // 15-point estimate
  double error;   // |15-point - 7-point|
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluate_segment(const std::function<double(double)>& f, double lo, double hi) {
  Segment seg;
  seg.lo = lo;
  seg.hi = hi;
  seg.value = apply_rule(gauss15(), f, lo, hi);
  const double coarse = apply_rule(gauss7(), f, lo, hi);
  seg.error = std::fabs(seg.value - coarse);
  if (!std::isfinite(seg.value)) {
    std::ostringstream msg;
    msg << "quadrature: integrand non-finite on [" << lo << ", " << hi << "]";
    throw quadrature_error(msg.str());
  }
  return seg;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double abs_tol, int max_intervals) {
  if (!(lo < hi)) {
    if (lo == hi) return {0.0, 0.0, 0};
    throw quadrature_error("quadrature: requires lo <= hi");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw quadrature_error("quadrature: bounds must be finite (truncate the tail first)");
  }

  std::priority_queue<Segment> queue;
  queue.push(evaluate_segment(f, lo, hi));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  int intervals = 1;

  const double min_width = 1e-15 * (hi - lo);
  double stuck_error = 0.0;  // error attributed to segments too narrow to split

  while (total_error > abs_tol && intervals < max_intervals && !queue.empty()) {
    const Segment worst = queue.top();
    queue.pop();
    if (worst.hi - worst.lo < min_width) {
      // Cannot refine further at double precision; bank the residual.
      stuck_error += worst.error;
      total_error -= worst.error;
      if (stuck_error > abs_tol) break;
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Segment left = evaluate_segment(f, worst.lo, mid);
    const Segment right = evaluate_segment(f, mid, worst.hi);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++intervals;
  }

  total_error += stuck_error;
  if (total_error > abs_tol) {
    std::ostringstream msg;
    msg << "quadrature failed to converge on [" << lo << ", " << hi
        << "]: error estimate " << total_error << " > tolerance " << abs_tol
        << " after " << intervals << " intervals";
    throw quadrature_error(msg.str());
  }
  return {total_value, total_error, intervals};
}

}  // namespace exptest
