#include "semilab/inequalities/maximal.hpp"

#include <cmath>

#include "common.hpp"
#include "semilab/error.hpp"

namespace semilab {

namespace {

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw InvalidArgument(std::string(what) + " must be finite and >= 0");
  }
}

Estimate min_over(const std::vector<Estimate>& probs, std::size_t from, std::size_t count) {
  Estimate out = probs[from];
  for (std::size_t i = 1; i < count; ++i) out = min(out, probs[from + i]);
  return out;
}

Estimate max_over(const std::vector<Estimate>& probs, std::size_t from, std::size_t count) {
  Estimate out = probs[from];
  for (std::size_t i = 1; i < count; ++i) out = max(out, probs[from + i]);
  return out;
}

Json values_json(const std::vector<Estimate>& probs, std::size_t from, std::size_t count) {
  Json out = Json::array();
  for (std::size_t i = 0; i < count; ++i) out.push_back(estimate_to_json(probs[from + i]));
  return out;
}

}  // namespace

std::string to_string(MogulskiiVariant variant) {
  return variant == MogulskiiVariant::min ? "min" : "max";
}

MogulskiiVariant parse_mogulskii_variant(std::string_view text) {
  if (text == "min") return MogulskiiVariant::min;
  if (text == "max") return MogulskiiVariant::max;
  throw UnknownName("unknown Mogul'skii variant '" + std::string(text) + "' (min|max)");
}

InequalityReport ottaviani_skorohod(const PathModel& model, double alpha, double beta,
                                    const Engine& engine, std::size_t workers) {
  detail::Stopwatch clock;
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw InvalidArgument("ottaviani_skorohod needs alpha, beta > 0");
  }
  auto report = detail::start_report("ottaviani-skorohod", model, engine);
  report.params["alpha"] = json_real(alpha);
  report.params["beta"] = json_real(beta);
  detail::warn_unless_strong(report, model);

  const auto n = model.length();
  const double level = alpha + beta;
  std::vector<PathEvent> events{
      [level](const PathStatistics& x) { return x.U() >= level; },
      [alpha](const PathStatistics& x) { return x.final_radial() >= alpha; }};
  for (std::size_t k = 0; k < n; ++k) {
    events.emplace_back([k, beta](const PathStatistics& x) { return x.to_end[k] <= beta; });
  }
  const auto probs = event_probabilities(model, events, engine, workers);
  const auto factor = min_over(probs, 2, n);
  report.lhs = probs[0] * factor;
  report.rhs = probs[1];
  report.details["p_max_ge"] = estimate_to_json(probs[0]);
  report.details["p_to_end_le_beta"] = values_json(probs, 2, n);
  report.details["min_factor"] = estimate_to_json(factor);

  const auto mog = mogulskii(model, 1, level, beta, MogulskiiVariant::max, engine, workers);
  Json c;
  c["a_minus_b"] = mog.details["rhs_threshold"];
  c["threshold_matches_alpha"] = (level - beta) == alpha;
  c["lhs"] = json_real(mog.lhs.value);
  c["rhs"] = json_real(mog.rhs.value);
  c["agree"] = mog.lhs.value == report.lhs.value && mog.rhs.value == report.rhs.value;
  report.details["mogulskii_max_m1"] = c;
  detail::finish(report, clock);
  return report;
}

InequalityReport mogulskii(const PathModel& model, std::size_t m, double a, double b,
                           MogulskiiVariant variant, const Engine& engine, std::size_t workers) {
  detail::Stopwatch clock;
  const auto n = model.length();
  if (m < 1 || m > n) throw InvalidArgument("mogulskii needs 1 <= m <= n");
  require_nonnegative(a, "a");
  require_nonnegative(b, "b");
  auto report = detail::start_report("mogulskii", model, engine);
  report.params["variant"] = to_string(variant);
  report.params["m"] = m;
  report.params["a"] = json_real(a);
  report.params["b"] = json_real(b);
  detail::warn_unless_strong(report, model);

  const bool is_min = variant == MogulskiiVariant::min;
  const double rhs_level = is_min ? a + b : a - b;
  std::vector<PathEvent> events;
  if (is_min) {
    events.emplace_back([m, a](const PathStatistics& x) { return x.min_radial_from(m) <= a; });
    events.emplace_back([rhs_level](const PathStatistics& x) { return x.final_radial() <= rhs_level; });
  } else {
    events.emplace_back([m, a](const PathStatistics& x) { return x.max_radial_from(m) >= a; });
    events.emplace_back([rhs_level](const PathStatistics& x) { return x.final_radial() >= rhs_level; });
  }
  for (std::size_t k = m - 1; k < n; ++k) {
    events.emplace_back([k, b](const PathStatistics& x) { return x.to_end[k] <= b; });
  }
  const auto probs = event_probabilities(model, events, engine, workers);
  const auto count = n - m + 1;
  const auto factor = min_over(probs, 2, count);
  report.lhs = probs[0] * factor;
  report.rhs = (!is_min && rhs_level < 0.0) ? Estimate::exact(1.0) : probs[1];
  report.details["rhs_threshold"] = json_real(rhs_level);
  report.details["p_first"] = estimate_to_json(probs[0]);
  report.details["p_to_end_le_b"] = values_json(probs, 2, count);
  report.details["min_factor"] = estimate_to_json(factor);
  detail::finish(report, clock);
  return report;
}

InequalityReport levy_ottaviani(const PathModel& model, const std::vector<double>& a,
                                const Engine& engine, std::size_t workers) {
  detail::Stopwatch clock;
  const auto l = a.size();
  if (l < 2) throw InvalidArgument("levy_ottaviani needs l >= 2 (the statement fails for l = 1)");
  for (double ai : a) require_nonnegative(ai, "a_i");
  auto report = detail::start_report("levy-ottaviani", model, engine);
  report.params["a"] = Json::array();
  for (double ai : a) report.params["a"].push_back(json_real(ai));
  detail::warn_unless_strong(report, model);

  const auto n = model.length();
  double total = 0.0;
  for (double ai : a) total += ai;
  std::vector<PathEvent> events{[total](const PathStatistics& x) { return x.U() > total; }};
  // p_{a_i} needs P(R_k > a_i) for every i, k; the even case also needs
  // P(D_k > a_1) for every k.
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      events.emplace_back([k, ai = a[i]](const PathStatistics& x) { return x.radial[k] > ai; });
    }
  }
  const bool even = l % 2 == 0;
  if (even) {
    for (std::size_t k = 0; k < n; ++k) {
      events.emplace_back([k, a1 = a[0]](const PathStatistics& x) { return x.to_end[k] > a1; });
    }
  }
  const auto probs = event_probabilities(model, events, engine, workers);
  std::vector<Estimate> p(l);
  for (std::size_t i = 0; i < l; ++i) p[i] = max_over(probs, 1 + i * n, n);
  const auto p_prime = even ? max_over(probs, 1 + l * n, n) : p[0];
  Estimate rhs = Estimate::exact(0.0);
  for (std::size_t i = 1; i < l; ++i) rhs = rhs + p[i];
  report.lhs = probs[0];
  report.rhs = rhs + p_prime;
  report.details["sum_a"] = json_real(total);
  report.details["p_a"] = Json::array();
  for (const auto& pi : p) report.details["p_a"].push_back(estimate_to_json(pi));
  report.details["p_prime"] = estimate_to_json(p_prime);
  report.details["p_prime_kind"] = even ? "max_k P(d(S_k, S_n) > a_1)" : "p_{a_1}";
  detail::finish(report, clock);
  return report;
}

}  // namespace semilab
