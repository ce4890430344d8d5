#include "semilab/probability/law.hpp"

#include <algorithm>
#include <cmath>

#include "semilab/algebra/element.hpp"
#include "semilab/error.hpp"
#include "semilab/probability/distribution.hpp"

namespace semilab {

DiscreteLaw::DiscreteLaw(std::vector<double> values, std::vector<double> probabilities)
    : values_(std::move(values)), probabilities_(std::move(probabilities)) {
  if (values_.empty() || values_.size() != probabilities_.size()) {
    throw InvalidArgument("law needs matching nonempty value and probability lists");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw InvalidArgument("law atom is not finite");
    if (i > 0 && !(values_[i - 1] < values_[i])) {
      throw InvalidArgument("law atoms must be strictly increasing");
    }
    if (!(probabilities_[i] > 0.0)) throw InvalidArgument("law probabilities must be > 0");
  }
  auto copy = probabilities_;
  const double total = sorted_sum(copy);
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw InvalidArgument("law has total mass " + format_real(total));
  }
  tails_.assign(values_.size(), 0.0);
  for (std::size_t i = values_.size() - 1; i > 0; --i) {
    tails_[i - 1] = tails_[i] + probabilities_[i];
  }
}

DiscreteLaw DiscreteLaw::from_atoms(std::vector<std::pair<double, double>> atoms) {
  std::sort(atoms.begin(), atoms.end());
  std::vector<double> values;
  std::vector<double> probabilities;
  std::vector<double> group;
  for (std::size_t i = 0; i < atoms.size();) {
    std::size_t j = i;
    group.clear();
    while (j < atoms.size() && atoms[j].first == atoms[i].first) group.push_back(atoms[j++].second);
    values.push_back(atoms[i].first);
    probabilities.push_back(sorted_sum(group));
    i = j;
  }
  return DiscreteLaw(std::move(values), std::move(probabilities));
}

double DiscreteLaw::tail(double y) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), y);
  if (it == values_.begin()) return 1.0;
  return tails_[static_cast<std::size_t>(it - values_.begin()) - 1];
}

double DiscreteLaw::tail_at_least(double y) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), y);
  if (it == values_.begin()) return 1.0;
  return tails_[static_cast<std::size_t>(it - values_.begin()) - 1];
}

double DiscreteLaw::moment(double alpha) const {
  if (!(alpha > 0.0)) throw InvalidArgument("moment order must be > 0");
  std::vector<double> terms;
  terms.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0.0) throw InvalidArgument("moment needs a nonnegative law");
    terms.push_back(std::pow(values_[i], alpha) * probabilities_[i]);
  }
  return sorted_sum(terms);
}

}  // namespace semilab
