#include "semilab/probability/lemmas.hpp"

#include <cmath>
#include <vector>

#include "semilab/error.hpp"
#include "semilab/probability/distribution.hpp"

namespace semilab {

TailMomentResult tail_moment_identity(const DiscreteLaw& law, double alpha) {
  if (!(alpha > 0.0)) throw InvalidArgument("alpha must be > 0");
  const auto values = law.values();
  if (values.front() < 0.0) throw InvalidArgument("tail-moment identity needs Z >= 0");
  std::vector<double> pieces;
  pieces.reserve(values.size());
  pieces.push_back(std::pow(values[0], alpha));  // P(Z > t) = 1 below the first atom
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    pieces.push_back(law.tail_after(i) *
                     (std::pow(values[i + 1], alpha) - std::pow(values[i], alpha)));
  }
  TailMomentResult out;
  out.lhs = law.moment(alpha);
  out.rhs = sorted_sum(pieces);
  out.diff = out.lhs - out.rhs;
  return out;
}

PigeonholeResult pigeonhole_power_check(double a, std::span<const double> weights,
                                        std::span<const double> terms, double p) {
  if (weights.size() != terms.size() || weights.empty()) {
    throw InvalidArgument("pigeonhole check needs matching nonempty weight and term lists");
  }
  if (!(p > 0.0)) throw InvalidArgument("p must be > 0");
  if (!(a >= 0.0)) throw InvalidArgument("a must be >= 0");
  std::vector<double> combo;
  std::vector<double> wsum;
  std::vector<double> powers;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (!(weights[j] >= 0.0) || !(terms[j] >= 0.0)) {
      throw InvalidArgument("weights and terms must be >= 0");
    }
    combo.push_back(weights[j] * terms[j]);
    wsum.push_back(weights[j]);
    powers.push_back(std::pow(terms[j], p));
  }
  if (a > sorted_sum(combo)) throw InvalidArgument("hypothesis a <= sum w_j a_j fails");
  PigeonholeResult out;
  out.lhs = std::pow(a, p);
  out.rhs = std::pow(sorted_sum(wsum), p) * sorted_sum(powers);
  out.holds = out.lhs <= out.rhs;
  return out;
}

}  // namespace semilab
