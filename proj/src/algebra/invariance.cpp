#include "semilab/algebra/invariance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "semilab/error.hpp"

namespace semilab {

std::string_view to_string(InvarianceKind kind) {
  switch (kind) {
    case InvarianceKind::left: return "left";
    case InvarianceKind::right: return "right";
    case InvarianceKind::bi: return "bi";
    case InvarianceKind::strong_left: return "strong-left";
    case InvarianceKind::strong_right: return "strong-right";
  }
  return "?";
}

InvarianceKind parse_invariance_kind(std::string_view text) {
  for (auto kind : {InvarianceKind::left, InvarianceKind::right, InvarianceKind::bi,
                    InvarianceKind::strong_left, InvarianceKind::strong_right}) {
    if (to_string(kind) == text) return kind;
  }
  throw UnknownName("unknown invariance kind '" + std::string(text) +
                    "' (left, right, bi, strong-left, strong-right)");
}

std::string describe(const ScanMode& mode) {
  if (const auto* e = std::get_if<Exhaustive>(&mode)) {
    return "exhaustive(bound=" + std::to_string(e->bound) + ")";
  }
  const auto& s = std::get<Sampled>(mode);
  return "sampled(count=" + std::to_string(s.count) + ", seed=" + std::to_string(s.seed) + ")";
}

double default_tolerance(const MetricSemigroup& instance) {
  return instance.is_discrete() ? 0.0 : 1e-9;
}

namespace {

using TupleVisitor = std::function<void(std::span<const Element>)>;

Element draw(const MetricSemigroup& instance, const std::vector<Element>& special, Rng& rng) {
  if (!special.empty() && rng() % 16 == 0) {
    return special[rng() % special.size()];
  }
  return instance.sample(rng, SampleStyle::continuous);
}

std::vector<Element> require_slice(const MetricSemigroup& instance, const Exhaustive& mode) {
  auto slice = instance.slice(mode.bound);
  if (!slice) {
    throw InvalidArgument(instance.name() + " has no finite slice; use sampled mode");
  }
  return std::move(*slice);
}

void scan_tuples(const MetricSemigroup& instance, const ScanMode& mode, std::size_t arity,
                 const TupleVisitor& visit) {
  std::array<Element, 3> tuple;
  const std::span<const Element> view(tuple.data(), arity);
  if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
    const auto slice = require_slice(instance, *ex);
    const auto size = static_cast<std::uint64_t>(slice.size());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      if (size != 0 && total > ex->budget / size + 1) throw BudgetExceeded(total * size, ex->budget);
      total *= size;
    }
    if (total > ex->budget) throw BudgetExceeded(total, ex->budget);
    std::array<std::size_t, 3> index{};
    for (std::uint64_t t = 0; t < total; ++t) {
      for (std::size_t i = 0; i < arity; ++i) tuple[i] = slice[index[i]];
      visit(view);
      for (std::size_t i = arity; i-- > 0;) {
        if (++index[i] < slice.size()) break;
        index[i] = 0;
      }
    }
    return;
  }
  const auto& sampled = std::get<Sampled>(mode);
  const auto special = instance.distinguished();
  Rng rng(derive_seed(sampled.seed, arity));
  for (std::uint64_t t = 0; t < sampled.count; ++t) {
    for (std::size_t i = 0; i < arity; ++i) tuple[i] = draw(instance, special, rng);
    visit(view);
  }
}

// Accumulates one scan's verdict.
class Recorder {
 public:
  Recorder(std::string property, const ScanMode& mode, double tolerance) {
    report_.property = std::move(property);
    report_.mode = mode;
    report_.tolerance = tolerance;
  }

  void compare(const char* relation, std::vector<std::string> names,
               std::span<const Element> elements, double first, double second) {
    const double gap = std::abs(first - second);
    check(relation, std::move(names), elements, first, second, gap);
  }

  // Records a failure when `gap` exceeds the tolerance (NaN counts as failure).
  void check(const char* relation, std::vector<std::string> names,
             std::span<const Element> elements, double first, double second, double gap) {
    ++report_.checked;
    if (std::isnan(gap)) gap = INFINITY;
    report_.max_discrepancy = std::max(report_.max_discrepancy, gap);
    if (gap > report_.tolerance && !report_.witness) {
      report_.holds = false;
      report_.witness = Witness{relation, std::move(names),
                                std::vector<Element>(elements.begin(), elements.end()), first,
                                second};
    }
  }

  PropertyReport finish() { return std::move(report_); }

 private:
  PropertyReport report_;
};

void scan_left(const MetricSemigroup& g, const ScanMode& mode, Recorder& rec) {
  scan_tuples(g, mode, 3, [&](std::span<const Element> t) {
    const auto& a = t[0];
    const auto& b = t[1];
    const auto& c = t[2];
    rec.compare("d(c*a, c*b) = d(a, b)", {"a", "b", "c"}, t,
                g.distance(g.compose(c, a), g.compose(c, b)), g.distance(a, b));
  });
}

void scan_right(const MetricSemigroup& g, const ScanMode& mode, Recorder& rec) {
  scan_tuples(g, mode, 3, [&](std::span<const Element> t) {
    const auto& a = t[0];
    const auto& b = t[1];
    const auto& c = t[2];
    rec.compare("d(a*c, b*c) = d(a, b)", {"a", "b", "c"}, t,
                g.distance(g.compose(a, c), g.compose(b, c)), g.distance(a, b));
  });
}

}  // namespace

InvarianceReport check_invariance(const MetricSemigroup& g, InvarianceKind kind,
                                  const ScanMode& mode, std::optional<double> tolerance) {
  Recorder rec(std::string(to_string(kind)), mode, tolerance.value_or(default_tolerance(g)));
  switch (kind) {
    case InvarianceKind::left:
      scan_left(g, mode, rec);
      break;
    case InvarianceKind::right:
      scan_right(g, mode, rec);
      break;
    case InvarianceKind::bi:
      scan_left(g, mode, rec);
      scan_right(g, mode, rec);
      break;
    case InvarianceKind::strong_left:
      scan_left(g, mode, rec);
      scan_tuples(g, mode, 2, [&](std::span<const Element> t) {
        const auto& a = t[0];
        const auto& b = t[1];
        rec.compare("d(a, a*b) = d(b, b*b)", {"a", "b"}, t, g.distance(a, g.compose(a, b)),
                    g.distance(b, g.compose(b, b)));
      });
      break;
    case InvarianceKind::strong_right:
      scan_right(g, mode, rec);
      scan_tuples(g, mode, 2, [&](std::span<const Element> t) {
        const auto& a = t[0];
        const auto& b = t[1];
        rec.compare("d(a, b*a) = d(b, b*b)", {"a", "b"}, t, g.distance(a, g.compose(b, a)),
                    g.distance(b, g.compose(b, b)));
      });
      break;
  }
  auto report = rec.finish();
  report.kind = kind;
  return report;
}

PropertyReport check_associativity(const MetricSemigroup& g, const ScanMode& mode,
                                   std::optional<double> tolerance) {
  Recorder rec("associativity", mode, tolerance.value_or(default_tolerance(g)));
  scan_tuples(g, mode, 3, [&](std::span<const Element> t) {
    const auto left = g.compose(g.compose(t[0], t[1]), t[2]);
    const auto right = g.compose(t[0], g.compose(t[1], t[2]));
    // Coordinates rather than the metric: the Koranyi gauge turns a rounding
    // error e in z into a distance of order sqrt(e).
    double gap = 0.0;
    if (g.is_discrete() || left.index() != right.index()) {
      gap = left == right ? 0.0 : 1.0;
    } else {
      const auto cl = coordinates(left);
      const auto cr = coordinates(right);
      for (std::size_t i = 0; i < cl.size(); ++i) {
        const double scale = 1.0 + std::max(std::abs(cl[i]), std::abs(cr[i]));
        gap = std::max(gap, std::abs(cl[i] - cr[i]) / scale);
      }
    }
    rec.check("(a*b)*c = a*(b*c)", {"a", "b", "c"}, t, gap, 0.0, gap);
  });
  return rec.finish();
}

PropertyReport check_metric_axioms(const MetricSemigroup& g, const ScanMode& mode,
                                   std::optional<double> tolerance) {
  Recorder rec("metric", mode, tolerance.value_or(default_tolerance(g)));
  scan_tuples(g, mode, 3, [&](std::span<const Element> t) {
    const auto& a = t[0];
    const auto& b = t[1];
    const auto& c = t[2];
    const double ab = g.distance(a, b);
    const double ba = g.distance(b, a);
    const double bc = g.distance(b, c);
    const double ac = g.distance(a, c);
    rec.compare("d(a, b) = d(b, a)", {"a", "b"}, t.first(2), ab, ba);
    const double aa = g.distance(a, a);
    rec.check("d(a, a) = 0", {"a"}, t.first(1), aa, 0.0, aa);
    // Distinct elements must be at positive distance; equal ones at zero.
    const bool same = g.equal(a, b);
    const double sep = same ? ab : (ab > 0.0 ? 0.0 : INFINITY);
    rec.check(same ? "a = b implies d(a, b) = 0" : "a != b implies d(a, b) > 0", {"a", "b"},
              t.first(2), ab, 0.0, sep);
    const double excess = std::max(0.0, ac - (ab + bc));
    rec.check("d(a, c) <= d(a, b) + d(b, c)", {"a", "b", "c"}, t, ac, ab + bc, excess);
  });
  return rec.finish();
}

PropertyReport two_homogeneity_check(const MetricSemigroup& g, const ScanMode& mode,
                                     std::optional<double> tolerance) {
  const auto e = g.identity();
  if (!e) throw InvalidArgument(g.name() + " has no identity; 2-homogeneity needs one");
  Recorder rec("two-homogeneity", mode, tolerance.value_or(default_tolerance(g)));
  scan_tuples(g, mode, 1, [&](std::span<const Element> t) {
    const auto& x = t[0];
    rec.compare("d(e, g*g) = 2 d(e, g)", {"g"}, t, g.distance(*e, g.compose(x, x)),
                2.0 * g.distance(*e, x));
  });
  return rec.finish();
}

std::vector<Element> scan_elements(const MetricSemigroup& g, const ScanMode& mode) {
  if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
    auto slice = require_slice(g, *ex);
    if (slice.size() > ex->budget) throw BudgetExceeded(slice.size(), ex->budget);
    return slice;
  }
  const auto& sampled = std::get<Sampled>(mode);
  std::vector<Element> out = g.distinguished();
  Rng rng(derive_seed(sampled.seed, 1));
  for (std::uint64_t i = 0; i < sampled.count; ++i) {
    out.push_back(g.sample(rng, SampleStyle::continuous));
  }
  return out;
}

std::vector<IdempotentInfo> idempotent_scan(const MetricSemigroup& g, const ScanMode& mode) {
  const auto elements = scan_elements(g, mode);
  const double tol = g.is_discrete() ? 0.0 : MetricSemigroup::kEqualityTolerance;
  std::vector<IdempotentInfo> found;
  for (const auto& x : elements) {
    if (!(g.distance(x, g.compose(x, x)) <= tol)) continue;
    const bool known = std::any_of(found.begin(), found.end(), [&](const IdempotentInfo& info) {
      return g.equal(info.element, x);
    });
    if (known) continue;
    IdempotentInfo info{x, true, true};
    for (const auto& y : elements) {
      if (info.left_identity && !g.equal(g.compose(x, y), y)) info.left_identity = false;
      if (info.right_identity && !g.equal(g.compose(y, x), y)) info.right_identity = false;
      if (!info.left_identity && !info.right_identity) break;
    }
    found.push_back(std::move(info));
  }
  return found;
}

}  // namespace semilab
