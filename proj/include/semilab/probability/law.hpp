#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace semilab {

// Finitely supported law of a real random variable: strictly increasing
// atoms with positive probabilities.
class DiscreteLaw {
 public:
  DiscreteLaw(std::vector<double> values, std::vector<double> probabilities);

  // Merges (value, probability) atoms with equal values. The merged
  // probabilities are summed in increasing order of magnitude, so the result
  // does not depend on the order of `atoms`.
  static DiscreteLaw from_atoms(std::vector<std::pair<double, double>> atoms);

  std::span<const double> values() const { return values_; }
  std::span<const double> probabilities() const { return probabilities_; }
  std::size_t size() const { return values_.size(); }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

  // P(Z > y) and P(Z >= y).
  double tail(double y) const;
  double tail_at_least(double y) const;
  // P(Z > values()[i]), i.e. the tail right after atom i.
  double tail_after(std::size_t i) const { return tails_[i]; }

  // E[Z^alpha] for Z >= 0, alpha > 0.
  double moment(double alpha) const;

  static constexpr double kMassTolerance = 1e-9;

 private:
  std::vector<double> values_;
  std::vector<double> probabilities_;
  std::vector<double> tails_;
};

}  // namespace semilab
