#include "semilab/inequalities/moments.hpp"

#include <cmath>

#include "common.hpp"
#include "semilab/error.hpp"
#include "semilab/probability/rearrangement.hpp"

namespace semilab {

namespace {

const ExactEngine& require_exact(const Engine& engine, const char* who) {
  const auto* exact = std::get_if<ExactEngine>(&engine);
  if (exact == nullptr) throw InvalidArgument(std::string(who) + " needs the exact engine");
  return *exact;
}

}  // namespace

InequalityReport moment_bound(const PathModel& model, double p, const Engine& engine,
                              std::size_t workers) {
  detail::Stopwatch clock;
  if (!(p > 0.0) || !std::isfinite(p)) throw InvalidArgument("moment_bound needs p > 0");
  const auto& exact = require_exact(engine, "moment_bound");
  auto report = detail::start_report("moment", model, engine);
  report.params["p"] = json_real(p);
  detail::warn_unless_strong(report, model);

  const std::vector<PathFunctional> functionals{
      [](const PathStatistics& x) { return x.U(); },
      [](const PathStatistics& x) { return x.M(); }};
  const auto laws = exact_laws(model, functionals, exact, workers);
  const double level = std::pow(2.0, -1.0 - 2.0 * p);
  const double u_star = decreasing_rearrangement(laws[0], level);
  const double m_moment = laws[1].moment(p);
  report.lhs = Estimate::exact(laws[0].moment(p));
  report.rhs = Estimate::exact(std::pow(2.0, 1.0 + 2.0 * p) * (m_moment + std::pow(u_star, p)));
  report.details["rearrangement_level"] = json_real(level);
  report.details["U_star"] = json_real(u_star);
  report.details["E_M_p"] = json_real(m_moment);
  detail::finish(report, clock);
  return report;
}

RearrangementRatio rearrangement_ratio(const PathModel& model, double t, double s,
                                       const Engine& engine, std::size_t workers) {
  if (!(0.0 <= t && t <= s && s <= 0.5)) {
    throw InvalidArgument("rearrangement_ratio needs 0 <= t <= s <= 1/2");
  }
  const auto& exact = require_exact(engine, "rearrangement_ratio");
  model.validate();
  const std::vector<PathFunctional> functionals{
      [](const PathStatistics& x) { return x.U(); },
      [](const PathStatistics& x) { return x.M(); }};
  const auto laws = exact_laws(model, functionals, exact, workers);

  RearrangementRatio r;
  r.t = t;
  r.s = s;
  r.instance = model.instance().name();
  r.params = model_to_json(model);
  r.params["t"] = json_real(t);
  r.params["s"] = json_real(s);
  r.u_t = decreasing_rearrangement(laws[0], t);
  r.u_s = decreasing_rearrangement(laws[0], s);
  r.m_half_t = decreasing_rearrangement(laws[1], t / 2.0);
  if (t == 0.0) {
    // log(1/t) / log log(4/t) -> 0 as t -> 0.
    r.log_factor = INFINITY;
    r.minimal_c1 = 0.0;
    return r;
  }
  r.log_factor = std::log(1.0 / t) / std::max(std::log(1.0 / s), std::log(std::log(4.0 / t)));
  const double denom = r.log_factor * (r.u_s + r.m_half_t);
  if (r.u_t == 0.0) {
    r.minimal_c1 = 0.0;
  } else if (denom == 0.0) {
    r.minimal_c1 = INFINITY;
  } else {
    r.minimal_c1 = r.u_t / denom;
  }
  return r;
}

Json to_json(const RearrangementRatio& r) {
  Json out;
  out["inequality"] = "rearrangement-ratio";
  out["instance"] = r.instance;
  out["params"] = r.params;
  out["U_star_t"] = json_real(r.u_t);
  out["U_star_s"] = json_real(r.u_s);
  out["M_star_half_t"] = json_real(r.m_half_t);
  out["log_factor"] = json_real(r.log_factor);
  out["minimal_c1"] = json_real(r.minimal_c1);
  out["verdict"] = "report-only";
  return out;
}

}  // namespace semilab
