#include "semilab/inequalities/classical.hpp"

#include <cmath>
#include <map>

#include "common.hpp"
#include "semilab/algebra/instances.hpp"
#include "semilab/error.hpp"
#include "semilab/inequalities/hoffmann_jorgensen.hpp"

namespace semilab {

bool is_real_line(const MetricSemigroup& instance) {
  const auto* e = dynamic_cast<const EuclideanSpace*>(&instance);
  return e != nullptr && e->dimension() == 1;
}

namespace {

double real_of(const Element& x) { return std::get<RealVector>(x)[0]; }

void require_real_line(const PathModel& model, const char* who) {
  if (!is_real_line(model.instance())) {
    throw InvalidArgument(std::string(who) + " is stated for real variables (euclidean1)");
  }
  if (real_of(model.z0) != 0.0 || real_of(model.z1) != 0.0) {
    throw InvalidArgument(std::string(who) + " needs z0 = z1 = 0");
  }
}

}  // namespace

bool is_nonnegative(const FiniteDistribution& law) {
  for (const auto& x : law.support()) {
    if (real_of(x) < 0.0) return false;
  }
  return true;
}

bool is_symmetric(const FiniteDistribution& law) {
  std::map<double, double> atoms;
  for (std::size_t i = 0; i < law.size(); ++i) atoms[real_of(law.support()[i])] = law.weights()[i];
  for (const auto& [x, w] : atoms) {
    const auto it = atoms.find(-x);
    if (it == atoms.end() || it->second != w) return false;
  }
  return true;
}

InequalityReport js_bound(const PathModel& model, std::size_t k, double t, const Engine& engine,
                          std::size_t workers) {
  detail::Stopwatch clock;
  require_real_line(model, "js_bound");
  for (const auto& law : model.variables) {
    if (!is_nonnegative(law)) throw InvalidArgument("js_bound needs nonnegative support points");
  }
  if (k == 0) throw InvalidArgument("js_bound needs k >= 1");
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("js_bound needs t > 0");
  auto report = detail::start_report("js", model, engine);
  report.params["k"] = k;
  report.params["t"] = json_real(t);

  const auto kd = static_cast<double>(k);
  const double threshold = (2.0 * kd - 1.0) * t;
  const std::vector<PathEvent> events{
      [threshold](const PathStatistics& x) { return x.U() > threshold; },
      [t](const PathStatistics& x) { return x.M() > t; },
      [t](const PathStatistics& x) { return x.U() > t; },
      [h = t / 2.0](const PathStatistics& x) { return x.U() > h; }};
  const auto probs = event_probabilities(model, events, engine, workers);
  report.lhs = probs[0];
  report.rhs = probs[1] + power(probs[2], kd);
  report.details["threshold"] = json_real(threshold);
  report.details["p_M_gt_t"] = detail::estimate_json(probs[1]);
  report.details["p_U_gt_t"] = detail::estimate_json(probs[2]);

  Json weak;
  weak["simple_rhs"] = json_real((probs[1] + power(probs[3], kd)).value);
  if (k <= model.length() + 1) {
    HJParams p;
    p.n.assign(k, 1);
    p.t.assign(k, t / 2.0);
    p.t[0] = t;
    p.s = t;
    const auto general = hj_general(model, p, engine, workers);
    weak["hj_general_threshold"] = general.details["threshold"];
    weak["hj_general_lhs"] = json_real(general.lhs.value);
    weak["hj_general_rhs"] = json_real(general.rhs.value);
    weak["rhs_not_above_weak"] = report.rhs.value <= general.rhs.value;
  } else {
    weak["hj_general"] = "not applicable: k > n + 1";
  }
  report.details["weak_form"] = weak;
  detail::finish(report, clock);
  return report;
}

double kn_root_term(double lambda, std::size_t n) {
  // n = 1 is exactly lambda; the expm1 route can land one ulp below it,
  // which flips tight cases.
  if (n == 1) return lambda;
  const auto nd = static_cast<double>(n);
  return -nd * std::expm1(std::log1p(-lambda) / nd);
}

std::vector<InequalityReport> kn_bounds(const PathModel& model, std::size_t k,
                                        const Engine& engine, std::size_t workers) {
  detail::Stopwatch clock;
  require_real_line(model, "kn_bounds");
  if (k == 0) throw InvalidArgument("kn_bounds needs k >= 1");
  if (k > model.length() + 1) throw InvalidArgument("kn_bounds needs k <= n + 1");
  bool nonnegative = true;
  bool symmetric = true;
  for (const auto& law : model.variables) {
    nonnegative = nonnegative && is_nonnegative(law);
    symmetric = symmetric && is_symmetric(law);
  }
  if (!nonnegative && !symmetric) {
    throw InvalidArgument("kn_bounds needs nonnegative or symmetric laws");
  }

  const auto kd = static_cast<double>(k);
  const std::vector<PathEvent> events{
      [](const PathStatistics& x) { return x.U() >= 1.0; },
      [k, kd](const PathStatistics& x) {
        return x.final_radial() >= kd + x.top_sum(k - 1);
      },
      [k, kd](const PathStatistics& x) { return x.U() >= kd + x.top_sum(k - 1); }};
  const auto probs = event_probabilities(model, events, engine, workers);
  const auto& lambda = probs[0];
  if (!(lambda.value < 1.0)) throw LambdaNotLessThanOne(lambda.value);

  const auto n = model.length();
  const auto bound = [&](double factor) {
    const auto f = [&](double l) {
      return l >= 1.0 ? INFINITY : factor * std::pow(kn_root_term(l, n), kd);
    };
    return Estimate{f(lambda.value), f(lambda.lo), f(lambda.hi)};
  };

  std::vector<InequalityReport> out;
  const auto emit = [&](const char* name, const char* hypothesis, const Estimate& lhs,
                        double factor) {
    auto report = detail::start_report(name, model, engine);
    report.params["k"] = k;
    report.lhs = lhs;
    report.rhs = bound(factor);
    report.details["hypothesis"] = hypothesis;
    report.details["lambda"] = detail::estimate_json(lambda);
    report.details["threshold"] = "k + Y_(n) + ... + Y_(n-k+2)";
    detail::finish(report, clock);
    out.push_back(std::move(report));
  };
  const double inv_fact = 1.0 / detail::factorial(k);
  if (nonnegative) emit("kn-nonnegative", "nonnegative", probs[1], inv_fact);
  if (symmetric) emit("kn-symmetric", "symmetric", probs[2], std::pow(2.0, kd - 1.0) * inv_fact);
  return out;
}

KnScalarResult kn_scalar_lemma(double lambda, std::size_t n, std::size_t k) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw InvalidArgument("lambda must lie in [0, 1)");
  if (n == 0 || k == 0) throw InvalidArgument("n and k must be >= 1");
  const auto kd = static_cast<double>(k);
  const double inv_fact = 1.0 / detail::factorial(k);
  const double root = kn_root_term(lambda, n);
  KnScalarResult r;
  r.lhs1 = inv_fact * std::pow(root, kd);
  r.rhs1 = inv_fact * std::pow(lambda / (1.0 - lambda), kd);
  r.first_holds = r.lhs1 <= r.rhs1;
  r.doubled = std::pow(2.0, 1.0 - 1.0 / kd) * (1.0 - lambda) * root;
  r.doubled_variant_exceeds = r.doubled > lambda;
  return r;
}

}  // namespace semilab
