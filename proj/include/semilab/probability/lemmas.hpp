#pragma once

#include <span>

#include "semilab/probability/law.hpp"

namespace semilab {

struct TailMomentResult {
  double lhs = 0.0;   // E[Z^alpha]
  double rhs = 0.0;   // alpha * integral of t^(alpha-1) P(Z > t) dt
  double diff = 0.0;  // lhs - rhs
};

// The integral is evaluated in closed form: P(Z > t) is constant between
// atoms, contributing level * (v_{i+1}^alpha - v_i^alpha). Z must be >= 0.
TailMomentResult tail_moment_identity(const DiscreteLaw& law, double alpha);

struct PigeonholeResult {
  double lhs = 0.0;  // a^p
  double rhs = 0.0;  // (sum w_j)^p * sum a_j^p
  bool holds = false;
};

// Conclusion of: 0 <= a <= sum w_j a_j with a_j, w_j >= 0 implies
// a^p <= (sum w_j)^p sum a_j^p. A violated hypothesis throws InvalidArgument.
PigeonholeResult pigeonhole_power_check(double a, std::span<const double> weights,
                                        std::span<const double> terms, double p);

}  // namespace semilab
