#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semilab/algebra/instance.hpp"

namespace semilab {

enum class InvarianceKind { left, right, bi, strong_left, strong_right };

std::string_view to_string(InvarianceKind kind);
InvarianceKind parse_invariance_kind(std::string_view text);

// Every tuple over instance.slice(bound); fails with BudgetExceeded when the
// tuple count passes `budget`.
struct Exhaustive {
  std::int64_t bound = 5;
  std::uint64_t budget = 10'000'000;
};

// `count` seeded random tuples. Draws mix in the distinguished elements.
struct Sampled {
  std::uint64_t count = 10'000;
  std::uint64_t seed = 0;
};

using ScanMode = std::variant<Exhaustive, Sampled>;

std::string describe(const ScanMode& mode);

// A tuple on which an identity between two distances fails.
struct Witness {
  std::string relation;           // e.g. "d(c*a, c*b) = d(a, b)"
  std::vector<std::string> names;  // role of each element, e.g. {"a","b","c"}
  std::vector<Element> elements;
  double first = 0.0;   // left-hand distance of the relation
  double second = 0.0;  // right-hand distance
};

struct PropertyReport {
  std::string property;
  std::optional<InvarianceKind> kind;
  ScanMode mode;
  double tolerance = 0.0;
  std::uint64_t checked = 0;
  bool holds = true;
  std::optional<Witness> witness;
  double max_discrepancy = 0.0;
};

using InvarianceReport = PropertyReport;

// Invariance verdict tolerance: 0 (exact) on discrete carriers, 1e-9 otherwise.
double default_tolerance(const MetricSemigroup& instance);

// Strong kinds check the plain invariance on triples first, then
// d(a, ab) = d(b, b^2) (resp. d(a, ba) = d(b, b^2)) on pairs. The witness is
// the first failure in scan order; max_discrepancy covers the whole scan.
InvarianceReport check_invariance(const MetricSemigroup& instance, InvarianceKind kind,
                                  const ScanMode& mode,
                                  std::optional<double> tolerance = std::nullopt);

// (ab)c = a(bc), measured as the largest relative coordinate difference.
PropertyReport check_associativity(const MetricSemigroup& instance, const ScanMode& mode,
                                   std::optional<double> tolerance = std::nullopt);

// Symmetry, d(a,a) = 0, positivity off the diagonal, triangle inequality.
PropertyReport check_metric_axioms(const MetricSemigroup& instance, const ScanMode& mode,
                                   std::optional<double> tolerance = std::nullopt);

// d(e, g^2) = 2 d(e, g). Needs an identity.
PropertyReport two_homogeneity_check(const MetricSemigroup& instance, const ScanMode& mode,
                                     std::optional<double> tolerance = std::nullopt);

struct IdempotentInfo {
  Element element;
  bool left_identity = false;
  bool right_identity = false;
};

// All g with d(g, g^2) = 0 among the scanned elements (the slice, or the
// distinguished elements plus `count` samples), each tested as a left and a
// right identity against the same scanned set.
std::vector<IdempotentInfo> idempotent_scan(const MetricSemigroup& instance,
                                            const ScanMode& mode);

// The element set an exhaustive or sampled single-element scan visits.
std::vector<Element> scan_elements(const MetricSemigroup& instance, const ScanMode& mode);

}  // namespace semilab
