#include "semilab/probability/rearrangement.hpp"

#include <algorithm>
#include <cmath>

#include "semilab/error.hpp"

namespace semilab {

namespace {

void require_unit(double t) {
  if (!(t >= 0.0 && t < 1.0)) throw InvalidArgument("rearrangement argument must lie in [0, 1)");
}

}  // namespace

// P(Z > y) equals tail_after(i) on [v_i, v_{i+1}), so the defining set is
// [0, v) with v the first atom whose tail is <= t.
double decreasing_rearrangement(const DiscreteLaw& law, double t) {
  require_unit(t);
  const auto values = law.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (law.tail_after(i) <= t) return std::max(0.0, values[i]);
  }
  return std::max(0.0, values.back());
}

RearrangementFunction::RearrangementFunction(const DiscreteLaw& law) {
  const auto values = law.values();
  for (std::size_t i = values.size(); i-- > 0;) {
    const double start = law.tail_after(i);
    if (start >= 1.0) break;
    const double v = std::max(0.0, values[i]);
    if (!values_.empty() && values_.back() == v) continue;
    breakpoints_.push_back(start);
    values_.push_back(v);
  }
}

double RearrangementFunction::operator()(double t) const {
  require_unit(t);
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

}  // namespace semilab
