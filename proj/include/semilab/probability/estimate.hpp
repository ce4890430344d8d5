#pragma once

#include <cstdint>

namespace semilab {

// A point value with an enclosing interval. Exact quantities have
// lo == value == hi; Monte Carlo quantities carry a confidence interval.
// Arithmetic propagates the interval through monotone operations only; every
// operand is assumed nonnegative (probabilities, ratios and powers of them).
struct Estimate {
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;

  static Estimate exact(double v) { return {v, v, v}; }
  bool is_exact() const { return lo == value && hi == value; }
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

// Two-sided Hoeffding half-width sqrt(ln(2/delta) / (2N)).
double hoeffding_halfwidth(std::uint64_t samples, double delta = 0.01);

// Hit fraction with its Hoeffding interval clipped to [0, 1].
Estimate hoeffding_estimate(std::uint64_t hits, std::uint64_t samples, double delta = 0.01);

Estimate operator+(const Estimate& a, const Estimate& b);
// Product of nonnegative quantities, with 0 * inf = 0.
Estimate operator*(const Estimate& a, const Estimate& b);
Estimate scale(const Estimate& a, double factor);
// a / b for nonnegative a, b; a zero denominator yields +inf.
Estimate ratio(const Estimate& a, const Estimate& b);
// a^p for p >= 0 with 0^0 = 1.
Estimate power(const Estimate& a, double p);
Estimate min(const Estimate& a, const Estimate& b);
Estimate max(const Estimate& a, const Estimate& b);
// 1 - a for a probability.
Estimate complement(const Estimate& a);

}  // namespace semilab
