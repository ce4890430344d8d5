#include "semilab/inequalities/hoffmann_jorgensen.hpp"

#include <cmath>
#include <numeric>

#include "common.hpp"
#include "semilab/error.hpp"

namespace semilab {

std::size_t HJParams::K() const { return std::accumulate(n.begin(), n.end(), std::size_t{0}); }

double hj_threshold(const HJParams& params) {
  const auto K = params.K();
  double tail = 0.0;
  for (std::size_t i = 1; i < params.k(); ++i) {
    tail += 2.0 * static_cast<double>(params.n[i]) * params.t[i];
  }
  return (2.0 * static_cast<double>(params.n[0]) - 1.0) * params.t[0] + tail +
         static_cast<double>(K - 1) * params.s;
}

std::vector<std::size_t> i0_set(std::span<const double> p_le, std::span<const std::size_t> n) {
  if (p_le.size() != n.size()) throw InvalidArgument("i0_set needs matching list lengths");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const auto exponent = static_cast<double>(n[i] - (i == 0 ? 1 : 0));
    if (std::pow(p_le[i], exponent) <= 1.0 / detail::factorial(n[i])) out.push_back(i + 1);
  }
  return out;
}

namespace {

void validate(const HJParams& p, std::size_t length) {
  if (p.n.empty()) throw InvalidArgument("hj_general needs k >= 1");
  if (p.t.size() != p.n.size()) throw InvalidArgument("hj_general needs one t_i per n_i");
  for (auto ni : p.n) {
    if (ni == 0) throw InvalidArgument("n_i must be positive");
  }
  for (double ti : p.t) {
    if (!(ti >= 0.0) || !std::isfinite(ti)) throw InvalidArgument("t_i must be finite and >= 0");
  }
  if (!(p.s >= 0.0) || !std::isfinite(p.s)) throw InvalidArgument("s must be finite and >= 0");
  if (p.K() > length + 1) {
    throw InvalidArgument("sum of n_i = " + std::to_string(p.K()) + " exceeds n + 1 = " +
                          std::to_string(length + 1));
  }
}

Json params_json(const HJParams& p) {
  Json out;
  out["n_i"] = p.n;
  out["t"] = Json::array();
  for (double ti : p.t) out["t"].push_back(json_real(ti));
  out["s"] = json_real(p.s);
  out["strengthened"] = p.strengthened;
  return out;
}

void compare(InequalityReport& report, const InequalityReport& general,
             const std::string& label) {
  const double dl = std::abs(report.lhs.value - general.lhs.value);
  const double dr = (std::isinf(report.rhs.value) && std::isinf(general.rhs.value))
                        ? 0.0
                        : std::abs(report.rhs.value - general.rhs.value);
  Json c;
  c["lhs"] = json_real(general.lhs.value);
  c["rhs"] = json_real(general.rhs.value);
  c["lhs_diff"] = json_real(dl);
  c["rhs_diff"] = json_real(dr);
  c["agree"] = dl <= kSpecializationTolerance && dr <= kSpecializationTolerance;
  report.details[label] = c;
}

}  // namespace

InequalityReport hj_general(const PathModel& model, const HJParams& params, const Engine& engine,
                            std::size_t workers) {
  detail::Stopwatch clock;
  auto report = detail::start_report("hj-general", model, engine);
  validate(params, model.length());
  const auto echo = params_json(params);
  for (const auto& [key, value] : echo.items()) report.params[key] = value;
  detail::warn_unless_strong(report, model);

  const auto k = params.k();
  const auto K = params.K();
  const double threshold = hj_threshold(params);
  const double tail_level = static_cast<double>(K - 1) * params.s;
  std::vector<PathEvent> events;
  events.emplace_back([threshold](const PathStatistics& x) { return x.U() > threshold; });
  if (params.strengthened) {
    events.emplace_back(
        [K, tail_level](const PathStatistics& x) { return x.k_tail(K) > tail_level; });
  } else {
    events.emplace_back([s = params.s](const PathStatistics& x) { return x.M() > s; });
  }
  for (std::size_t i = 0; i < k; ++i) {
    const double ti = params.t[i];
    events.emplace_back([ti](const PathStatistics& x) { return x.U() <= ti; });
    events.emplace_back([ti](const PathStatistics& x) { return x.U() > ti; });
  }
  const auto probs = event_probabilities(model, events, engine, workers);
  const auto& tail = probs[1];
  std::vector<double> p_le(k);
  for (std::size_t i = 0; i < k; ++i) p_le[i] = probs[2 + 2 * i].value;
  const auto i0 = i0_set(p_le, params.n);
  std::vector<bool> in_i0(k, false);
  for (auto i : i0) in_i0[i - 1] = true;

  Estimate product = in_i0[0] ? Estimate::exact(1.0) : probs[2];
  bool guarded = false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& le = probs[2 + 2 * i];
    const auto& gt = probs[3 + 2 * i];
    const auto ni = static_cast<double>(params.n[i]);
    if (in_i0[i]) {
      product = product * power(gt, ni);
    } else {
      if (le.value == 0.0) guarded = true;
      product = product * scale(power(ratio(gt, le), ni), 1.0 / detail::factorial(params.n[i]));
    }
  }
  report.lhs = probs[0];
  report.rhs = guarded ? Estimate::exact(INFINITY) : product + tail;

  auto& d = report.details;
  d["threshold"] = json_real(threshold);
  d["K"] = K;
  d["I0"] = i0;
  d["p_le_t"] = Json::array();
  d["p_gt_t"] = Json::array();
  for (std::size_t i = 0; i < k; ++i) {
    d["p_le_t"].push_back(detail::estimate_json(probs[2 + 2 * i]));
    d["p_gt_t"].push_back(detail::estimate_json(probs[3 + 2 * i]));
  }
  d["tail_event"] = params.strengthened ? "top order statistics sum > (K-1)s" : "M_n > s";
  d["tail"] = detail::estimate_json(tail);
  if (guarded) d["guard"] = "zero denominator outside I0; rhs set to +inf";
  detail::finish(report, clock);
  return report;
}

InequalityReport hj_lt(const PathModel& model, double t, double s, const Engine& engine,
                       std::size_t workers) {
  detail::Stopwatch clock;
  if (!(t > 0.0) || !(s > 0.0) || !std::isfinite(t) || !std::isfinite(s)) {
    throw InvalidArgument("hj_lt needs t, s > 0");
  }
  auto report = detail::start_report("hj-lt", model, engine);
  report.params["t"] = json_real(t);
  report.params["s"] = json_real(s);
  detail::warn_unless_strong(report, model);

  const double threshold = 3.0 * t + s;
  const std::vector<PathEvent> events{
      [threshold](const PathStatistics& x) { return x.U() > threshold; },
      [t](const PathStatistics& x) { return x.U() > t; },
      [s](const PathStatistics& x) { return x.M() > s; }};
  const auto probs = event_probabilities(model, events, engine, workers);
  report.lhs = probs[0];
  report.rhs = probs[1] * probs[1] + probs[2];
  report.details["threshold"] = json_real(threshold);
  report.details["p_gt_t"] = detail::estimate_json(probs[1]);
  report.details["p_M_gt_s"] = detail::estimate_json(probs[2]);

  const auto general = hj_general(model, HJParams{{1, 1}, {t, t}, s, false}, engine, workers);
  compare(report, general, "hj_general_k2");
  detail::finish(report, clock);
  return report;
}

InequalityReport hj_hm(const PathModel& model, std::size_t K, double t, double s,
                       const Engine& engine, std::size_t workers) {
  detail::Stopwatch clock;
  if (K == 0) throw InvalidArgument("hj_hm needs K >= 1");
  if (!(t >= 0.0) || !(s >= 0.0) || !std::isfinite(t) || !std::isfinite(s)) {
    throw InvalidArgument("hj_hm needs finite t, s >= 0");
  }
  auto report = detail::start_report("hj-hm", model, engine);
  report.params["K"] = K;
  report.params["t"] = json_real(t);
  report.params["s"] = json_real(s);
  detail::warn_unless_strong(report, model);

  const auto Kd = static_cast<double>(K);
  const double threshold = 2.0 * Kd * t + (Kd - 1.0) * s;
  const std::vector<PathEvent> events{
      [threshold](const PathStatistics& x) { return x.U() > threshold; },
      [t](const PathStatistics& x) { return x.U() > t; },
      [t](const PathStatistics& x) { return x.U() <= t; },
      [s](const PathStatistics& x) { return x.M() > s; }};
  const auto probs = event_probabilities(model, events, engine, workers);
  report.lhs = probs[0];
  if (probs[2].value == 0.0) {
    report.rhs = Estimate::exact(INFINITY);
    report.details["guard"] = "P(U_n <= t) = 0; rhs set to +inf";
  } else {
    report.rhs = scale(power(ratio(probs[1], probs[2]), Kd), 1.0 / detail::factorial(K)) + probs[3];
  }
  report.details["threshold"] = json_real(threshold);
  report.details["p_gt_t"] = detail::estimate_json(probs[1]);
  report.details["p_le_t"] = detail::estimate_json(probs[2]);
  report.details["p_M_gt_s"] = detail::estimate_json(probs[3]);

  if (K <= model.length() + 1) {
    const auto general = hj_general(model, HJParams{{K}, {t}, s, false}, engine, workers);
    compare(report, general, "hj_general_k1");
    // The general statement at k = 1 has the smaller threshold (2K - 1)t and
    // a rhs no larger than this one, so it implies this bound.
    auto& c = report.details["hj_general_k1"];
    c["lhs_dominates"] = report.lhs.value <= general.lhs.value;
    c["rhs_dominated"] = general.rhs.value <= report.rhs.value;
  } else {
    report.details["hj_general_k1"] = "not applicable: K > n + 1";
  }
  detail::finish(report, clock);
  return report;
}

}  // namespace semilab
