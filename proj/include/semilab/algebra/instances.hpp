#pragma once

#include <cstdint>

#include "semilab/algebra/instance.hpp"

namespace semilab {

// R^d under addition with the Euclidean norm; bi-invariant group.
class EuclideanSpace final : public MetricSemigroup {
 public:
  explicit EuclideanSpace(std::size_t dimension);
  std::size_t dimension() const { return dim_; }
  std::optional<Element> identity() const override;

 protected:
  Element do_compose(const Element& a, const Element& b) const override;
  double do_distance(const Element& a, const Element& b) const override;
  std::string validation_error(const Element& element) const override;
  Element do_sample(Rng& rng, SampleStyle style) const override;
  std::string encode_coordinates(const Element& element) const override;
  Element decode_coordinates(std::string_view text) const override;

 private:
  std::size_t dim_;
};

// The ax+b group, (a,b)(a',b') = (aa', ab'+b), with the hyperbolic distance
// of the upper half-plane pulled back along g -> g(i). Left- but not
// right-invariant.
class AffineGroup final : public MetricSemigroup {
 public:
  AffineGroup();
  std::optional<Element> identity() const override;

 protected:
  Element do_compose(const Element& a, const Element& b) const override;
  double do_distance(const Element& a, const Element& b) const override;
  std::string validation_error(const Element& element) const override;
  Element do_sample(Rng& rng, SampleStyle style) const override;
  std::string encode_coordinates(const Element& element) const override;
  Element decode_coordinates(std::string_view text) const override;
};

// The Heisenberg group with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+(xy'-yx')/2)
// and the Koranyi distance d(a,b) = |a^{-1} b|, where
// |(x,y,z)| = ((x^2+y^2)^2 + 16 z^2)^{1/4}. Left- but not right-invariant.
class HeisenbergGroup final : public MetricSemigroup {
 public:
  HeisenbergGroup();
  std::optional<Element> identity() const override;

  static double gauge(const HeisenbergPoint& p);

 protected:
  Element do_compose(const Element& a, const Element& b) const override;
  double do_distance(const Element& a, const Element& b) const override;
  std::string validation_error(const Element& element) const override;
  Element do_sample(Rng& rng, SampleStyle style) const override;
  std::string encode_coordinates(const Element& element) const override;
  Element decode_coordinates(std::string_view text) const override;
};

// Z/m with the discrete metric.
class CyclicGroup final : public MetricSemigroup {
 public:
  explicit CyclicGroup(std::int64_t order);
  std::int64_t order() const { return order_; }
  std::optional<Element> identity() const override;
  std::optional<std::vector<Element>> slice(std::int64_t bound) const override;
  std::vector<Element> distinguished() const override;

 protected:
  Element do_compose(const Element& a, const Element& b) const override;
  double do_distance(const Element& a, const Element& b) const override;
  std::string validation_error(const Element& element) const override;
  Element do_sample(Rng& rng, SampleStyle style) const override;
  std::string encode_coordinates(const Element& element) const override;
  Element decode_coordinates(std::string_view text) const override;

 private:
  std::int64_t order_;
};

// (0, inf) under addition with |x - y|: bi-invariant, no identity, no
// idempotent.
class PositiveReals final : public MetricSemigroup {
 public:
  PositiveReals();

 protected:
  Element do_compose(const Element& a, const Element& b) const override;
  double do_distance(const Element& a, const Element& b) const override;
  std::string validation_error(const Element& element) const override;
  Element do_sample(Rng& rng, SampleStyle style) const override;
  std::string encode_coordinates(const Element& element) const override;
  Element decode_coordinates(std::string_view text) const override;
};

// {h^{n+1}, h^n g : n >= 0} with h^n g^e . h^m g^f = h^{n+m} g^f and the
// Manhattan distance |n-m| + |e-f|. Left-invariant, not strongly so; g is an
// idempotent left-identity but not a right identity.
class CounterexampleSemigroup final : public MetricSemigroup {
 public:
  explicit CounterexampleSemigroup(std::int64_t sampler_max_n = 8);

  // Elements with n <= bound ordered by (n, eps): g, h, hg, h^2, ...
  std::optional<std::vector<Element>> slice(std::int64_t bound) const override;
  std::vector<Element> distinguished() const override;
  std::optional<std::int64_t> sampler_bound() const override { return max_n_; }

  static Element g() { return CexWord{0, 1}; }
  static Element h() { return CexWord{1, 0}; }

 protected:
  Element do_compose(const Element& a, const Element& b) const override;
  double do_distance(const Element& a, const Element& b) const override;
  std::string validation_error(const Element& element) const override;
  Element do_sample(Rng& rng, SampleStyle style) const override;
  std::string encode_coordinates(const Element& element) const override;
  Element decode_coordinates(std::string_view text) const override;

 private:
  std::int64_t max_n_;
};

InstancePtr make_euclidean(std::size_t dimension);
InstancePtr make_affine();
InstancePtr make_heisenberg();
InstancePtr make_cyclic(std::int64_t order);
InstancePtr make_positive_reals();
InstancePtr make_counterexample(std::int64_t sampler_max_n = 8);

}  // namespace semilab
