#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semilab/algebra/element.hpp"
#include "semilab/parallel.hpp"

namespace semilab {

// Continuous draws cover the carrier; lattice draws come from a small dyadic
// grid, so that products and distances collide often (atoms shared between
// outcomes exercise the strict/non-strict edges of event predicates).
enum class SampleStyle { continuous, lattice };

// Invariance class an instance is known to have. These are the expectations
// that the invariance checkers are run against, not computed properties.
struct Annotations {
  bool left = false;
  bool right = false;
  bool strong_left = false;
  bool strong_right = false;
  bool group = false;
  // Only meaningful for groups.
  std::optional<bool> two_homogeneous;
  // Completeness cannot be checked by finite computation; recorded as given.
  bool complete = true;

  bool bi() const { return left && right; }
};

// A set with an associative product and a metric. Instances are immutable
// and safe to share across threads; every member is a pure function of its
// arguments. Public members validate their inputs and throw InvalidElement.
class MetricSemigroup {
 public:
  virtual ~MetricSemigroup() = default;
  MetricSemigroup(const MetricSemigroup&) = delete;
  MetricSemigroup& operator=(const MetricSemigroup&) = delete;

  const std::string& name() const { return name_; }
  const std::string& codec_prefix() const { return prefix_; }
  const Annotations& annotations() const { return annotations_; }
  bool is_discrete() const { return discrete_; }

  Element compose(const Element& a, const Element& b) const;
  double distance(const Element& a, const Element& b) const;

  void validate(const Element& element) const;
  bool is_valid(const Element& element) const;

  virtual std::optional<Element> identity() const { return std::nullopt; }

  Element sample(Rng& rng, SampleStyle style = SampleStyle::continuous) const;

  // "prefix:c1,c2,..." with shortest round-trip reals.
  std::string encode(const Element& element) const;
  // Accepts the encode() form or the bare coordinate list.
  Element decode(std::string_view text) const;

  // Exact for discrete carriers; coordinate-wise within 1e-12 otherwise.
  bool equal(const Element& a, const Element& b) const;

  // A finite portion of the carrier indexed by `bound`, in a fixed order, for
  // exhaustive scans. Empty for carriers without a natural finite slice.
  virtual std::optional<std::vector<Element>> slice(std::int64_t bound) const;

  // Elements every scan includes besides samples: identity and generators.
  virtual std::vector<Element> distinguished() const;

  // Sampler bound parameter (e.g. N_max of the counterexample), if any.
  virtual std::optional<std::int64_t> sampler_bound() const { return std::nullopt; }

  static constexpr double kEqualityTolerance = 1e-12;

 protected:
  MetricSemigroup(std::string name, std::string prefix, Annotations annotations,
                  bool discrete);

  virtual Element do_compose(const Element& a, const Element& b) const = 0;
  virtual double do_distance(const Element& a, const Element& b) const = 0;
  // Empty when valid, otherwise the reason.
  virtual std::string validation_error(const Element& element) const = 0;
  virtual Element do_sample(Rng& rng, SampleStyle style) const = 0;
  virtual std::string encode_coordinates(const Element& element) const = 0;
  virtual Element decode_coordinates(std::string_view text) const = 0;

 private:
  std::string name_;
  std::string prefix_;
  Annotations annotations_;
  bool discrete_;
};

using InstancePtr = std::shared_ptr<const MetricSemigroup>;

// Flat coordinate list of any element, for tolerance comparisons.
std::vector<double> coordinates(const Element& element);

}  // namespace semilab
