#include "semilab/algebra/instance.hpp"

#include <cmath>
#include <type_traits>

#include "semilab/error.hpp"

namespace semilab {

MetricSemigroup::MetricSemigroup(std::string name, std::string prefix,
                                 Annotations annotations, bool discrete)
    : name_(std::move(name)),
      prefix_(std::move(prefix)),
      annotations_(annotations),
      discrete_(discrete) {}

Element MetricSemigroup::compose(const Element& a, const Element& b) const {
  validate(a);
  validate(b);
  return do_compose(a, b);
}

double MetricSemigroup::distance(const Element& a, const Element& b) const {
  validate(a);
  validate(b);
  return do_distance(a, b);
}

void MetricSemigroup::validate(const Element& element) const {
  if (auto reason = validation_error(element); !reason.empty()) {
    throw InvalidElement(name_ + ": " + reason + " [" + describe(element) + "]");
  }
}

bool MetricSemigroup::is_valid(const Element& element) const {
  return validation_error(element).empty();
}

Element MetricSemigroup::sample(Rng& rng, SampleStyle style) const {
  return do_sample(rng, style);
}

std::string MetricSemigroup::encode(const Element& element) const {
  validate(element);
  return prefix_ + ":" + encode_coordinates(element);
}

Element MetricSemigroup::decode(std::string_view text) const {
  text = trim(text);
  if (text.size() > prefix_.size() && text.substr(0, prefix_.size()) == prefix_ &&
      text[prefix_.size()] == ':') {
    text.remove_prefix(prefix_.size() + 1);
  } else if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    throw InvalidElement(name_ + ": codec prefix '" + std::string(text.substr(0, colon)) +
                         "' does not match '" + prefix_ + "'");
  }
  Element element = decode_coordinates(trim(text));
  validate(element);
  return element;
}

bool MetricSemigroup::equal(const Element& a, const Element& b) const {
  if (a.index() != b.index()) return false;
  if (discrete_) return a == b;
  const auto ca = coordinates(a);
  const auto cb = coordinates(b);
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!(std::abs(ca[i] - cb[i]) <= kEqualityTolerance)) return false;
  }
  return true;
}

std::optional<std::vector<Element>> MetricSemigroup::slice(std::int64_t) const {
  return std::nullopt;
}

std::vector<Element> MetricSemigroup::distinguished() const {
  if (auto e = identity()) return {*e};
  return {};
}

std::vector<double> coordinates(const Element& element) {
  return std::visit(
      [](const auto& v) -> std::vector<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RealVector>) {
          return {v.coords.begin(), v.coords.begin() + v.dim};
        } else if constexpr (std::is_same_v<T, AffineMap>) {
          return {v.scale, v.shift};
        } else if constexpr (std::is_same_v<T, HeisenbergPoint>) {
          return {v.x, v.y, v.z};
        } else if constexpr (std::is_same_v<T, CexWord>) {
          return {static_cast<double>(v.n), static_cast<double>(v.eps)};
        } else if constexpr (std::is_same_v<T, CyclicIndex>) {
          return {static_cast<double>(v.k)};
        } else {
          return {};
        }
      },
      element);
}

}  // namespace semilab
