#include "semilab/probability/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "semilab/error.hpp"

namespace semilab {

double sorted_sum(std::vector<double>& values) {
  std::sort(values.begin(), values.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b) || (std::abs(a) == std::abs(b) && a < b); });
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

FiniteDistribution::FiniteDistribution(InstancePtr instance, std::vector<Element> support,
                                       std::vector<double> weights)
    : instance_(std::move(instance)), support_(std::move(support)), weights_(std::move(weights)) {
  if (!instance_) throw InvalidArgument("distribution needs an instance");
  if (support_.empty()) throw InvalidArgument("distribution support is empty");
  if (support_.size() != weights_.size()) {
    throw InvalidArgument("support and weight lists differ in length");
  }
  std::set<std::string> seen;
  for (const auto& x : support_) {
    if (!seen.insert(instance_->encode(x)).second) {
      throw InvalidArgument("duplicate support point " + instance_->encode(x));
    }
  }
  for (double w : weights_) {
    if (!std::isfinite(w) || !(w > 0.0)) {
      throw InvalidArgument("weights must be finite and > 0");
    }
  }
  auto copy = weights_;
  const double total = sorted_sum(copy);
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw InvalidArgument("weights sum to " + format_real(total) + ", not 1");
  }
  cumulative_.resize(weights_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    acc += weights_[i];
    cumulative_[i] = acc;
  }
  cumulative_.back() = INFINITY;  // absorbs rounding in the last bucket
}

FiniteDistribution FiniteDistribution::uniform(InstancePtr instance, std::vector<Element> support) {
  const auto n = support.size();
  if (n == 0) throw InvalidArgument("distribution support is empty");
  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  // Put the rounding residue on the last weight so the sum is as close to 1
  // as double allows.
  double rest = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) rest -= weights[i];
  weights.back() = rest;
  return FiniteDistribution(std::move(instance), std::move(support), std::move(weights));
}

FiniteDistribution FiniteDistribution::point_mass(InstancePtr instance, Element element) {
  return FiniteDistribution(std::move(instance), {std::move(element)}, {1.0});
}

std::size_t FiniteDistribution::sample_index(Rng& rng) const {
  const double u = uniform01(rng);
  return static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) -
                                  cumulative_.begin());
}

std::string FiniteDistribution::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) out += ",";
    out += "(" + instance_->encode(support_[i]) + "):" + format_real(weights_[i]);
  }
  return out;
}

namespace {

std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth < 0) throw InvalidArgument("unbalanced ')' in '" + std::string(text) + "'");
    if (text[i] == sep && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw InvalidArgument("unbalanced '(' in '" + std::string(text) + "'");
  out.push_back(trim(text.substr(start)));
  return out;
}

}  // namespace

FiniteDistribution parse_distribution(const InstancePtr& instance, std::string_view text) {
  std::vector<Element> support;
  std::vector<double> weights;
  for (auto entry : split_top_level(trim(text), ',')) {
    const auto colon = entry.rfind(':');
    const auto close = entry.rfind(')');
    if (colon == std::string_view::npos || (close != std::string_view::npos && colon < close)) {
      throw InvalidArgument("distribution entry '" + std::string(entry) +
                            "' is not element:weight");
    }
    auto element_text = trim(entry.substr(0, colon));
    if (element_text.size() >= 2 && element_text.front() == '(' && element_text.back() == ')') {
      element_text = trim(element_text.substr(1, element_text.size() - 2));
    }
    double weight = 0.0;
    try {
      weight = parse_real(entry.substr(colon + 1));
    } catch (const InvalidElement&) {
      throw InvalidArgument("bad weight in distribution entry '" + std::string(entry) + "'");
    }
    try {
      support.push_back(instance->decode(element_text));
    } catch (const InvalidElement& e) {
      throw InvalidElement(std::string(e.what()) +
                           " (wrap multi-coordinate elements in parentheses: \"(x,y):w\")");
    }
    weights.push_back(weight);
  }
  return FiniteDistribution(instance, std::move(support), std::move(weights));
}

std::vector<FiniteDistribution> parse_variables(const InstancePtr& instance,
                                                std::string_view text, std::size_t n) {
  std::vector<FiniteDistribution> laws;
  for (auto part : split_top_level(trim(text), ';')) {
    if (part.empty()) continue;
    laws.push_back(parse_distribution(instance, part));
  }
  if (laws.empty()) throw InvalidArgument("no distribution given");
  if (n == 0) return laws;
  if (laws.size() == 1) return std::vector<FiniteDistribution>(n, laws.front());
  if (laws.size() != n) {
    throw InvalidArgument(std::to_string(laws.size()) + " laws given for n = " + std::to_string(n));
  }
  return laws;
}

}  // namespace semilab
