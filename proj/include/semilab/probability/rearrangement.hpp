#pragma once

#include <span>
#include <vector>

#include "semilab/probability/law.hpp"

namespace semilab {

// X*(t) = sup { y >= 0 : P(Z > y) > t } for t in [0, 1), with sup of the
// empty set taken as 0. Throws InvalidArgument for t outside [0, 1).
double decreasing_rearrangement(const DiscreteLaw& law, double t);

// The step function t -> X*(t) on [0, 1). values()[i] holds on
// [breakpoints()[i], breakpoints()[i + 1]); breakpoints()[0] = 0.
class RearrangementFunction {
 public:
  explicit RearrangementFunction(const DiscreteLaw& law);

  double operator()(double t) const;

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

}  // namespace semilab
