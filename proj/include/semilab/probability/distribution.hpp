#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semilab/algebra/instance.hpp"

namespace semilab {

// A finitely supported law on the elements of one instance.
// Support points are pairwise distinct under the codec; weights are positive
// and sum to 1 within 1e-12.
class FiniteDistribution {
 public:
  FiniteDistribution(InstancePtr instance, std::vector<Element> support,
                     std::vector<double> weights);

  static FiniteDistribution uniform(InstancePtr instance, std::vector<Element> support);
  static FiniteDistribution point_mass(InstancePtr instance, Element element);

  const MetricSemigroup& instance() const { return *instance_; }
  const InstancePtr& instance_ptr() const { return instance_; }
  std::span<const Element> support() const { return support_; }
  std::span<const double> weights() const { return weights_; }
  std::size_t size() const { return support_.size(); }

  // Index of a support point drawn by inverse CDF from one uniform.
  std::size_t sample_index(Rng& rng) const;

  // "codec:weight,codec:weight,..." (see parse_distribution).
  std::string to_string() const;

  static constexpr double kWeightTolerance = 1e-12;

 private:
  InstancePtr instance_;
  std::vector<Element> support_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

// Parses "element:weight,element:weight,...". Entries are split on commas
// outside parentheses and the weight follows the last ':' of an entry, so
// multi-coordinate elements are written "(2,1):0.5" or "(affine:2,1):0.5".
FiniteDistribution parse_distribution(const InstancePtr& instance, std::string_view text);

// Per-variable laws separated by ';'. A single law is replicated n times
// when n is given; otherwise the number of laws is the number of variables.
std::vector<FiniteDistribution> parse_variables(const InstancePtr& instance,
                                                std::string_view text, std::size_t n = 0);

// Sum of values in increasing order of magnitude; the result does not depend
// on the input order. Mutates (sorts) its argument.
double sorted_sum(std::vector<double>& values);

}  // namespace semilab
