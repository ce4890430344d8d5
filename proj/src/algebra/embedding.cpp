#include "semilab/algebra/embedding.hpp"

#include <memory>

namespace semilab {

IdempotentPresent::IdempotentPresent(const MetricSemigroup& instance, Element witness,
                                     bool is_identity)
    : Error(instance.name() + ": idempotent " + instance.encode(witness) +
            (is_identity ? " (the identity) is present" : " is present")),
      witness_(std::move(witness)),
      encoded_(instance.encode(witness_)),
      is_identity_(is_identity) {}

NotStronglyLeftInvariant::NotStronglyLeftInvariant(const MetricSemigroup& instance,
                                                   Witness witness)
    : Error(instance.name() + ": not strongly left-invariant, " + witness.relation +
            " fails"),
      witness_(std::move(witness)) {}

namespace {

class AdjoinedMonoid final : public MetricSemigroup {
 public:
  explicit AdjoinedMonoid(InstancePtr inner)
      : MetricSemigroup(inner->name() + "+e", inner->codec_prefix(), derive(*inner),
                        inner->is_discrete()),
        inner_(std::move(inner)) {}

  std::optional<Element> identity() const override { return AdjoinedIdentity{}; }

  std::optional<std::vector<Element>> slice(std::int64_t bound) const override {
    auto base = inner_->slice(bound);
    if (!base) return std::nullopt;
    base->insert(base->begin(), AdjoinedIdentity{});
    return base;
  }

  std::vector<Element> distinguished() const override {
    std::vector<Element> out{AdjoinedIdentity{}};
    for (auto& x : inner_->distinguished()) out.push_back(std::move(x));
    return out;
  }

 protected:
  Element do_compose(const Element& a, const Element& b) const override {
    if (is_e(a)) return b;
    if (is_e(b)) return a;
    return inner_->compose(a, b);
  }

  double do_distance(const Element& a, const Element& b) const override {
    if (is_e(a) && is_e(b)) return 0.0;
    if (is_e(a)) return to_identity(b);
    if (is_e(b)) return to_identity(a);
    return inner_->distance(a, b);
  }

  std::string validation_error(const Element& element) const override {
    if (is_e(element)) return {};
    if (inner_->is_valid(element)) return {};
    return "not an element of " + inner_->name() + " or the adjoined identity";
  }

  Element do_sample(Rng& rng, SampleStyle style) const override {
    if (rng() % 8 == 0) return AdjoinedIdentity{};
    return inner_->sample(rng, style);
  }

  std::string encode_coordinates(const Element& element) const override {
    if (is_e(element)) return "e";
    const auto full = inner_->encode(element);
    return full.substr(inner_->codec_prefix().size() + 1);
  }

  Element decode_coordinates(std::string_view text) const override {
    if (text == "e") return AdjoinedIdentity{};
    return inner_->decode(text);
  }

 private:
  static bool is_e(const Element& x) { return std::holds_alternative<AdjoinedIdentity>(x); }

  double to_identity(const Element& g) const { return inner_->distance(g, inner_->compose(g, g)); }

  static Annotations derive(const MetricSemigroup& inner) {
    const auto& a = inner.annotations();
    Annotations out;
    out.left = true;
    out.strong_left = true;
    // A bi-invariant semigroup extends to a bi-invariant monoid.
    out.right = a.right && a.strong_right;
    out.strong_right = out.right;
    out.group = false;
    out.complete = a.complete;
    return out;
  }

  InstancePtr inner_;
};

}  // namespace

InstancePtr adjoin_identity(const InstancePtr& instance, const ScanMode& preflight) {
  if (!instance) throw InvalidArgument("adjoin_identity: null instance");
  if (auto e = instance->identity()) throw IdempotentPresent(*instance, *e, true);
  for (const auto& info : idempotent_scan(*instance, preflight)) {
    throw IdempotentPresent(*instance, info.element, false);
  }
  auto strong = check_invariance(*instance, InvarianceKind::strong_left, preflight);
  if (!strong.holds) throw NotStronglyLeftInvariant(*instance, *strong.witness);

  auto monoid = std::make_shared<AdjoinedMonoid>(instance);
  auto axioms = check_metric_axioms(*monoid, preflight);
  if (!axioms.holds) {
    throw Error(monoid->name() + ": adjoined metric fails " + axioms.witness->relation);
  }
  auto left = check_invariance(*monoid, InvarianceKind::left, preflight);
  if (!left.holds) {
    throw Error(monoid->name() + ": adjoined metric fails " + left.witness->relation);
  }
  return monoid;
}

}  // namespace semilab
