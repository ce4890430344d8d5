#pragma once

#include "semilab/algebra/instance.hpp"
#include "semilab/algebra/invariance.hpp"
#include "semilab/error.hpp"

namespace semilab {

// adjoin_identity refused: the semigroup already has an idempotent (possibly
// a genuine identity).
class IdempotentPresent : public Error {
 public:
  IdempotentPresent(const MetricSemigroup& instance, Element witness, bool is_identity);
  const Element& witness() const { return witness_; }
  const std::string& encoded() const { return encoded_; }
  bool is_identity() const { return is_identity_; }

 private:
  Element witness_;
  std::string encoded_;
  bool is_identity_;
};

class NotStronglyLeftInvariant : public Error {
 public:
  explicit NotStronglyLeftInvariant(const MetricSemigroup& instance, Witness witness);
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

// Builds G + {e} with e*g = g*e = g, d(e, e) = 0 and d(e, g) = d(g, g^2).
// Preflight, in order: an identity refuses with IdempotentPresent(e); any
// idempotent found by idempotent_scan refuses with IdempotentPresent(g); a
// strong-left failure refuses with NotStronglyLeftInvariant. The result is
// then checked for the metric axioms and left-invariance on the same mode.
// Products and distances of original elements are delegated unchanged.
InstancePtr adjoin_identity(const InstancePtr& instance,
                            const ScanMode& preflight = Sampled{10'000, 0});

}  // namespace semilab
