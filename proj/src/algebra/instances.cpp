#include "semilab/algebra/instances.hpp"

#include <charconv>
#include <cmath>
#include <memory>

#include "semilab/error.hpp"

namespace semilab {

namespace {

std::vector<double> parse_reals(std::string_view text, std::size_t expected,
                                const std::string& who) {
  const auto fields = split_fields(text);
  if (fields.size() != expected) {
    throw InvalidElement(who + ": expected " + std::to_string(expected) +
                         " coordinates, got '" + std::string(text) + "'");
  }
  std::vector<double> out;
  out.reserve(fields.size());
  for (auto f : fields) out.push_back(parse_real(f));
  return out;
}

std::int64_t parse_integer(std::string_view text, const std::string& who) {
  text = trim(text);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidElement(who + ": not an integer: '" + std::string(text) + "'");
  }
  return value;
}

template <class T>
const T* as(const Element& e) {
  return std::get_if<T>(&e);
}

// Dyadic grid {lo, lo + step, ..., hi}.
double lattice_draw(Rng& rng, double lo, double hi, double step) {
  const auto count = static_cast<std::int64_t>(std::llround((hi - lo) / step));
  return lo + step * static_cast<double>(uniform_int(rng, 0, count));
}

// acosh(1 + x) for x >= 0 without cancellation near 0.
double acosh1p(double x) { return std::log1p(x + std::sqrt(x * (x + 2.0))); }

}  // namespace

// --- Euclidean ---------------------------------------------------------------

EuclideanSpace::EuclideanSpace(std::size_t dimension)
    : MetricSemigroup("euclidean" + std::to_string(dimension),
                      "euclidean" + std::to_string(dimension),
                      Annotations{.left = true,
                                  .right = true,
                                  .strong_left = true,
                                  .strong_right = true,
                                  .group = true,
                                  .two_homogeneous = true},
                      false),
      dim_(dimension) {
  if (dimension == 0 || dimension > kMaxRealDim) {
    throw InvalidArgument("euclidean dimension must be in [1, " +
                          std::to_string(kMaxRealDim) + "]");
  }
}

std::optional<Element> EuclideanSpace::identity() const { return RealVector::zero(dim_); }

Element EuclideanSpace::do_compose(const Element& a, const Element& b) const {
  RealVector out = *as<RealVector>(a);
  const auto& w = *as<RealVector>(b);
  for (std::size_t i = 0; i < dim_; ++i) out[i] += w[i];
  return out;
}

double EuclideanSpace::do_distance(const Element& a, const Element& b) const {
  const auto& u = *as<RealVector>(a);
  const auto& v = *as<RealVector>(b);
  if (dim_ == 1) return std::abs(u[0] - v[0]);
  double sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (u[i] - v[i]) * (u[i] - v[i]);
  return std::sqrt(sum);
}

std::string EuclideanSpace::validation_error(const Element& element) const {
  const auto* v = as<RealVector>(element);
  if (!v) return "not a real vector";
  if (v->dim != dim_) return "dimension " + std::to_string(v->dim) + " != " + std::to_string(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!std::isfinite((*v)[i])) return "non-finite coordinate";
  }
  return {};
}

Element EuclideanSpace::do_sample(Rng& rng, SampleStyle style) const {
  RealVector v = RealVector::zero(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    v[i] = style == SampleStyle::lattice ? lattice_draw(rng, -2.0, 2.0, 0.5)
                                         : -2.0 + 4.0 * uniform01(rng);
  }
  return v;
}

std::string EuclideanSpace::encode_coordinates(const Element& element) const {
  const auto& v = *as<RealVector>(element);
  std::string out;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) out += ",";
    out += format_real(v[i]);
  }
  return out;
}

Element EuclideanSpace::decode_coordinates(std::string_view text) const {
  const auto values = parse_reals(text, dim_, name());
  RealVector v = RealVector::zero(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = values[i];
  return v;
}

// --- Affine ------------------------------------------------------------------

AffineGroup::AffineGroup()
    : MetricSemigroup("affine", "affine",
                      Annotations{.left = true,
                                  .right = false,
                                  .strong_left = true,
                                  .strong_right = false,
                                  .group = true,
                                  .two_homogeneous = false},
                      false) {}

std::optional<Element> AffineGroup::identity() const { return AffineMap{1.0, 0.0}; }

Element AffineGroup::do_compose(const Element& a, const Element& b) const {
  const auto& f = *as<AffineMap>(a);
  const auto& g = *as<AffineMap>(b);
  return AffineMap{f.scale * g.scale, f.scale * g.shift + f.shift};
}

double AffineGroup::do_distance(const Element& a, const Element& b) const {
  const auto& f = *as<AffineMap>(a);
  const auto& g = *as<AffineMap>(b);
  const double ds = f.scale - g.scale;
  const double db = f.shift - g.shift;
  return acosh1p((ds * ds + db * db) / (2.0 * f.scale * g.scale));
}

std::string AffineGroup::validation_error(const Element& element) const {
  const auto* f = as<AffineMap>(element);
  if (!f) return "not an affine map";
  if (!std::isfinite(f->scale) || !std::isfinite(f->shift)) return "non-finite coordinate";
  if (!(f->scale > 0.0)) return "scale must be > 0";
  return {};
}

Element AffineGroup::do_sample(Rng& rng, SampleStyle style) const {
  if (style == SampleStyle::lattice) {
    static constexpr double kScales[] = {0.5, 0.75, 1.0, 1.5, 2.0};
    return AffineMap{kScales[uniform_int(rng, 0, 4)], lattice_draw(rng, -1.0, 1.0, 0.5)};
  }
  const double scale = std::exp(-1.0 + 2.0 * uniform01(rng));
  return AffineMap{scale, -2.0 + 4.0 * uniform01(rng)};
}

std::string AffineGroup::encode_coordinates(const Element& element) const {
  const auto& f = *as<AffineMap>(element);
  return format_real(f.scale) + "," + format_real(f.shift);
}

Element AffineGroup::decode_coordinates(std::string_view text) const {
  const auto v = parse_reals(text, 2, name());
  return AffineMap{v[0], v[1]};
}

// --- Heisenberg --------------------------------------------------------------

HeisenbergGroup::HeisenbergGroup()
    : MetricSemigroup("heisenberg", "heisenberg",
                      Annotations{.left = true,
                                  .right = false,
                                  .strong_left = true,
                                  .strong_right = false,
                                  .group = true,
                                  .two_homogeneous = false},
                      false) {}

std::optional<Element> HeisenbergGroup::identity() const { return HeisenbergPoint{}; }

double HeisenbergGroup::gauge(const HeisenbergPoint& p) {
  const double r2 = p.x * p.x + p.y * p.y;
  return std::sqrt(std::sqrt(r2 * r2 + 16.0 * p.z * p.z));
}

Element HeisenbergGroup::do_compose(const Element& a, const Element& b) const {
  const auto& p = *as<HeisenbergPoint>(a);
  const auto& q = *as<HeisenbergPoint>(b);
  return HeisenbergPoint{p.x + q.x, p.y + q.y, p.z + q.z + 0.5 * (p.x * q.y - p.y * q.x)};
}

double HeisenbergGroup::do_distance(const Element& a, const Element& b) const {
  const auto& p = *as<HeisenbergPoint>(a);
  const auto& q = *as<HeisenbergPoint>(b);
  // a^{-1} b with a^{-1} = (-x, -y, -z).
  const HeisenbergPoint rel{q.x - p.x, q.y - p.y, q.z - p.z + 0.5 * (p.y * q.x - p.x * q.y)};
  return gauge(rel);
}

std::string HeisenbergGroup::validation_error(const Element& element) const {
  const auto* p = as<HeisenbergPoint>(element);
  if (!p) return "not a Heisenberg point";
  if (!std::isfinite(p->x) || !std::isfinite(p->y) || !std::isfinite(p->z)) {
    return "non-finite coordinate";
  }
  return {};
}

Element HeisenbergGroup::do_sample(Rng& rng, SampleStyle style) const {
  if (style == SampleStyle::lattice) {
    return HeisenbergPoint{lattice_draw(rng, -1.0, 1.0, 0.5), lattice_draw(rng, -1.0, 1.0, 0.5),
                           lattice_draw(rng, -1.0, 1.0, 0.5)};
  }
  auto draw = [&] { return -1.5 + 3.0 * uniform01(rng); };
  const double x = draw();
  const double y = draw();
  return HeisenbergPoint{x, y, draw()};
}

std::string HeisenbergGroup::encode_coordinates(const Element& element) const {
  const auto& p = *as<HeisenbergPoint>(element);
  return format_real(p.x) + "," + format_real(p.y) + "," + format_real(p.z);
}

Element HeisenbergGroup::decode_coordinates(std::string_view text) const {
  const auto v = parse_reals(text, 3, name());
  return HeisenbergPoint{v[0], v[1], v[2]};
}

// --- Cyclic ------------------------------------------------------------------

CyclicGroup::CyclicGroup(std::int64_t order)
    : MetricSemigroup("cyclic" + std::to_string(order), "cyclic" + std::to_string(order),
                      Annotations{.left = true,
                                  .right = true,
                                  .strong_left = true,
                                  .strong_right = true,
                                  .group = true,
                                  // d(e, g^2) = 2 d(e, g) needs g^2 != e with
                                  // distance 2, impossible under the 0/1 metric.
                                  .two_homogeneous = order == 1},
                      true),
      order_(order) {
  if (order < 1) throw InvalidArgument("cyclic group order must be >= 1");
}

std::optional<Element> CyclicGroup::identity() const { return CyclicIndex{0}; }

std::optional<std::vector<Element>> CyclicGroup::slice(std::int64_t) const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t k = 0; k < order_; ++k) out.emplace_back(CyclicIndex{k});
  return out;
}

std::vector<Element> CyclicGroup::distinguished() const {
  std::vector<Element> out{CyclicIndex{0}};
  if (order_ > 1) out.emplace_back(CyclicIndex{1});
  return out;
}

Element CyclicGroup::do_compose(const Element& a, const Element& b) const {
  return CyclicIndex{(as<CyclicIndex>(a)->k + as<CyclicIndex>(b)->k) % order_};
}

double CyclicGroup::do_distance(const Element& a, const Element& b) const {
  return as<CyclicIndex>(a)->k == as<CyclicIndex>(b)->k ? 0.0 : 1.0;
}

std::string CyclicGroup::validation_error(const Element& element) const {
  const auto* c = as<CyclicIndex>(element);
  if (!c) return "not a cyclic index";
  if (c->k < 0 || c->k >= order_) return "index out of range [0, " + std::to_string(order_) + ")";
  return {};
}

Element CyclicGroup::do_sample(Rng& rng, SampleStyle) const {
  return CyclicIndex{uniform_int(rng, 0, order_ - 1)};
}

std::string CyclicGroup::encode_coordinates(const Element& element) const {
  return std::to_string(as<CyclicIndex>(element)->k);
}

Element CyclicGroup::decode_coordinates(std::string_view text) const {
  return CyclicIndex{parse_integer(text, name())};
}

// --- Positive reals ----------------------------------------------------------

PositiveReals::PositiveReals()
    : MetricSemigroup("positive-reals", "positive-reals",
                      Annotations{.left = true,
                                  .right = true,
                                  .strong_left = true,
                                  .strong_right = true,
                                  .group = false,
                                  .two_homogeneous = std::nullopt,
                                  .complete = false},
                      false) {}

Element PositiveReals::do_compose(const Element& a, const Element& b) const {
  return RealVector{(*as<RealVector>(a))[0] + (*as<RealVector>(b))[0]};
}

double PositiveReals::do_distance(const Element& a, const Element& b) const {
  return std::abs((*as<RealVector>(a))[0] - (*as<RealVector>(b))[0]);
}

std::string PositiveReals::validation_error(const Element& element) const {
  const auto* v = as<RealVector>(element);
  if (!v || v->dim != 1) return "not a real number";
  if (!std::isfinite((*v)[0])) return "non-finite value";
  if (!((*v)[0] > 0.0)) return "value must be > 0";
  return {};
}

Element PositiveReals::do_sample(Rng& rng, SampleStyle style) const {
  if (style == SampleStyle::lattice) return RealVector{lattice_draw(rng, 0.25, 3.0, 0.25)};
  return RealVector{4.0 * (1.0 - uniform01(rng))};
}

std::string PositiveReals::encode_coordinates(const Element& element) const {
  return format_real((*as<RealVector>(element))[0]);
}

Element PositiveReals::decode_coordinates(std::string_view text) const {
  return RealVector{parse_reals(text, 1, name())[0]};
}

// --- Counterexample ----------------------------------------------------------

CounterexampleSemigroup::CounterexampleSemigroup(std::int64_t sampler_max_n)
    : MetricSemigroup("counterexample", "cex",
                      Annotations{.left = true,
                                  .right = false,
                                  .strong_left = false,
                                  .strong_right = false,
                                  .group = false,
                                  .two_homogeneous = std::nullopt,
                                  .complete = true},
                      true),
      max_n_(sampler_max_n) {
  if (sampler_max_n < 1) throw InvalidArgument("counterexample sampler bound must be >= 1");
}

std::optional<std::vector<Element>> CounterexampleSemigroup::slice(std::int64_t bound) const {
  if (bound < 0) throw InvalidArgument("slice bound must be >= 0");
  std::vector<Element> out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    if (n > 0) out.emplace_back(CexWord{n, 0});
    out.emplace_back(CexWord{n, 1});
  }
  return out;
}

std::vector<Element> CounterexampleSemigroup::distinguished() const { return {g(), h()}; }

Element CounterexampleSemigroup::do_compose(const Element& a, const Element& b) const {
  const auto& u = *as<CexWord>(a);
  const auto& v = *as<CexWord>(b);
  return CexWord{u.n + v.n, v.eps};
}

double CounterexampleSemigroup::do_distance(const Element& a, const Element& b) const {
  const auto& u = *as<CexWord>(a);
  const auto& v = *as<CexWord>(b);
  return static_cast<double>(std::abs(u.n - v.n) + std::abs(u.eps - v.eps));
}

std::string CounterexampleSemigroup::validation_error(const Element& element) const {
  const auto* w = as<CexWord>(element);
  if (!w) return "not a counterexample word";
  if (w->n < 0) return "n must be >= 0";
  if (w->eps != 0 && w->eps != 1) return "eps must be 0 or 1";
  if (w->n == 0 && w->eps == 0) return "(n, eps) = (0, 0) is not an element";
  return {};
}

Element CounterexampleSemigroup::do_sample(Rng& rng, SampleStyle) const {
  while (true) {
    const auto n = uniform_int(rng, 0, max_n_);
    const auto eps = static_cast<int>(uniform_int(rng, 0, 1));
    if (n != 0 || eps != 0) return CexWord{n, eps};
  }
}

std::string CounterexampleSemigroup::encode_coordinates(const Element& element) const {
  const auto& w = *as<CexWord>(element);
  return std::to_string(w.n) + "," + std::to_string(w.eps);
}

Element CounterexampleSemigroup::decode_coordinates(std::string_view text) const {
  const auto fields = split_fields(text);
  if (fields.size() != 2) {
    throw InvalidElement("counterexample: expected 'n,eps', got '" + std::string(text) + "'");
  }
  return CexWord{parse_integer(fields[0], name()),
                 static_cast<int>(parse_integer(fields[1], name()))};
}

// --- factories ---------------------------------------------------------------

InstancePtr make_euclidean(std::size_t dimension) {
  return std::make_shared<EuclideanSpace>(dimension);
}
InstancePtr make_affine() { return std::make_shared<AffineGroup>(); }
InstancePtr make_heisenberg() { return std::make_shared<HeisenbergGroup>(); }
InstancePtr make_cyclic(std::int64_t order) { return std::make_shared<CyclicGroup>(order); }
InstancePtr make_positive_reals() { return std::make_shared<PositiveReals>(); }
InstancePtr make_counterexample(std::int64_t sampler_max_n) {
  return std::make_shared<CounterexampleSemigroup>(sampler_max_n);
}

}  // namespace semilab
