#include "semilab/algebra/catalog.hpp"

#include <charconv>

#include "semilab/algebra/embedding.hpp"
#include "semilab/algebra/instances.hpp"
#include "semilab/error.hpp"

namespace semilab {

Catalog::Catalog() {
  auto positive = make_positive_reals();
  entries_ = {
      {make_euclidean(1), "the real line under addition"},
      {make_euclidean(2), "the plane under vector addition"},
      {make_affine(), "ax+b group with the pulled-back hyperbolic metric"},
      {make_heisenberg(), "Heisenberg group with the Koranyi distance"},
      {make_cyclic(5), "Z/5 with the discrete metric"},
      {positive, "(0, inf) under addition, no identity"},
      {adjoin_identity(positive), "positive reals with an adjoined identity"},
      {make_counterexample(8), "left-invariant semigroup with an idempotent left-identity"},
  };
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog;
  return catalog;
}

const CatalogEntry* Catalog::entry(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.instance->name() == name) return &e;
  }
  return nullptr;
}

namespace {

std::optional<std::int64_t> numeric_suffix(std::string_view name, std::string_view stem) {
  if (name.size() <= stem.size() || name.substr(0, stem.size()) != stem) return std::nullopt;
  const auto digits = name.substr(stem.size());
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

}  // namespace

InstancePtr Catalog::find(std::string_view name) const {
  if (const auto* e = entry(name)) return e->instance;
  if (auto d = numeric_suffix(name, "euclidean"); d && *d >= 1 && *d <= 4) {
    return make_euclidean(static_cast<std::size_t>(*d));
  }
  if (auto m = numeric_suffix(name, "cyclic"); m && *m >= 1 && *m <= 1'000'000) {
    return make_cyclic(*m);
  }
  throw UnknownName("unknown instance '" + std::string(name) + "'");
}

InstancePtr find_instance(std::string_view name) { return Catalog::builtin().find(name); }

std::string describe_annotations(const Annotations& a) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string out = "{left: ";
  out += yn(a.left);
  out += ", right: ";
  out += yn(a.right);
  out += ", strong-left: ";
  out += yn(a.strong_left);
  out += ", strong-right: ";
  out += yn(a.strong_right);
  out += ", group: ";
  out += yn(a.group);
  if (a.two_homogeneous) {
    out += ", two-homogeneous: ";
    out += yn(*a.two_homogeneous);
  }
  out += ", complete: ";
  out += yn(a.complete);
  return out + "}";
}

}  // namespace semilab
