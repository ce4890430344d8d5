#include "semilab/probability/estimate.hpp"

#include <algorithm>
#include <cmath>

#include "semilab/error.hpp"

namespace semilab {

namespace {

double mul(double x, double y) { return (x == 0.0 || y == 0.0) ? 0.0 : x * y; }

double div(double x, double y) { return y == 0.0 ? INFINITY : x / y; }

}  // namespace

double hoeffding_halfwidth(std::uint64_t samples, double delta) {
  if (samples == 0) throw InvalidArgument("Monte Carlo needs at least one sample");
  return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(samples)));
}

Estimate hoeffding_estimate(std::uint64_t hits, std::uint64_t samples, double delta) {
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  const double h = hoeffding_halfwidth(samples, delta);
  return {p, std::max(0.0, p - h), std::min(1.0, p + h)};
}

Estimate operator+(const Estimate& a, const Estimate& b) {
  return {a.value + b.value, a.lo + b.lo, a.hi + b.hi};
}

Estimate operator*(const Estimate& a, const Estimate& b) {
  return {mul(a.value, b.value), mul(a.lo, b.lo), mul(a.hi, b.hi)};
}

Estimate scale(const Estimate& a, double factor) {
  return {mul(a.value, factor), mul(a.lo, factor), mul(a.hi, factor)};
}

Estimate ratio(const Estimate& a, const Estimate& b) {
  return {div(a.value, b.value), div(a.lo, b.hi), div(a.hi, b.lo)};
}

Estimate power(const Estimate& a, double p) {
  return {std::pow(a.value, p), std::pow(a.lo, p), std::pow(a.hi, p)};
}

Estimate min(const Estimate& a, const Estimate& b) {
  return {std::min(a.value, b.value), std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Estimate max(const Estimate& a, const Estimate& b) {
  return {std::max(a.value, b.value), std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Estimate complement(const Estimate& a) { return {1.0 - a.value, 1.0 - a.hi, 1.0 - a.lo}; }

}  // namespace semilab
