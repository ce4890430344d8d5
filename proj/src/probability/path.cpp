#include "semilab/probability/path.hpp"

#include <algorithm>

#include "semilab/error.hpp"

namespace semilab {

std::string to_string(Orientation orientation) {
  return orientation == Orientation::left ? "left" : "right";
}

Orientation parse_orientation(std::string_view text) {
  if (text == "left") return Orientation::left;
  if (text == "right") return Orientation::right;
  throw UnknownName("unknown orientation '" + std::string(text) + "' (left|right)");
}

std::vector<Element> partial_products(const MetricSemigroup& instance,
                                      std::span<const Element> xs, Orientation orientation) {
  if (xs.empty()) throw InvalidArgument("partial_products needs at least one element");
  std::vector<Element> out;
  out.reserve(xs.size());
  out.push_back(xs[0]);
  instance.validate(xs[0]);
  for (std::size_t j = 1; j < xs.size(); ++j) {
    out.push_back(orientation == Orientation::left ? instance.compose(out.back(), xs[j])
                                                   : instance.compose(xs[j], out.back()));
  }
  return out;
}

double PathStatistics::top_sum(std::size_t count) const {
  if (count > sorted_increments.size()) {
    throw InvalidArgument("order-statistic tail of " + std::to_string(count) +
                          " terms exceeds n = " + std::to_string(sorted_increments.size()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    total += sorted_increments[sorted_increments.size() - 1 - i];
  }
  return total;
}

double PathStatistics::k_tail(std::size_t K) const {
  if (K == 0) throw InvalidArgument("K must be positive");
  return top_sum(K - 1);
}

double PathStatistics::max_radial_from(std::size_t m) const {
  if (m < 1 || m > radial.size()) throw InvalidArgument("m out of range");
  return *std::max_element(radial.begin() + static_cast<std::ptrdiff_t>(m - 1), radial.end());
}

double PathStatistics::min_radial_from(std::size_t m) const {
  if (m < 1 || m > radial.size()) throw InvalidArgument("m out of range");
  return *std::min_element(radial.begin() + static_cast<std::ptrdiff_t>(m - 1), radial.end());
}

void compute_path_statistics(const MetricSemigroup& instance, std::span<const Element> xs,
                             const Element& z0, const Element& z1, Orientation orientation,
                             PathStatistics& out) {
  if (xs.empty()) throw InvalidArgument("path_statistics needs at least one element");
  const auto n = xs.size();
  const bool left = orientation == Orientation::left;
  out.partial.resize(n);
  out.radial.resize(n);
  out.to_end.resize(n);
  out.increments.resize(n);
  out.running_max.resize(n);

  for (std::size_t j = 0; j < n; ++j) {
    if (j == 0) {
      instance.validate(xs[0]);
      out.partial[0] = xs[0];
    } else {
      out.partial[j] = left ? instance.compose(out.partial[j - 1], xs[j])
                            : instance.compose(xs[j], out.partial[j - 1]);
    }
    const auto based = left ? instance.compose(z0, out.partial[j])
                            : instance.compose(out.partial[j], z0);
    out.radial[j] = instance.distance(z1, based);
    const auto step = left ? instance.compose(z0, xs[j]) : instance.compose(xs[j], z0);
    out.increments[j] = instance.distance(z0, step);
    out.running_max[j] = j == 0 ? out.increments[0]
                                : std::max(out.running_max[j - 1], out.increments[j]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    out.to_end[k] = k + 1 == n ? 0.0 : instance.distance(out.partial[k], out.partial[n - 1]);
  }
  out.sorted_increments = out.increments;
  std::sort(out.sorted_increments.begin(), out.sorted_increments.end());
  out.max_radial = *std::max_element(out.radial.begin(), out.radial.end());
}

PathStatistics path_statistics(const MetricSemigroup& instance, std::span<const Element> xs,
                               const Element& z0, const Element& z1, Orientation orientation) {
  PathStatistics out;
  compute_path_statistics(instance, xs, z0, z1, orientation, out);
  return out;
}

}  // namespace semilab
