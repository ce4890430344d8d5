#include "semilab/inequalities/report.hpp"

#include <cmath>

#include "semilab/error.hpp"

namespace semilab {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

Verdict decide(const Estimate& lhs, const Estimate& rhs, bool exact) {
  if (exact) return lhs.value <= rhs.value ? Verdict::holds : Verdict::violated;
  if (lhs.hi <= rhs.lo) return Verdict::holds;
  if (lhs.lo > rhs.hi) return Verdict::violated;
  return Verdict::indeterminate;
}

void InequalityReport::conclude() {
  slack = rhs.value - lhs.value;
  verdict = decide(lhs, rhs, is_exact(engine));
}

Json json_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "+inf" : "-inf";
  return value;
}

double real_from_json(const Json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    if (text == "+inf" || text == "inf") return INFINITY;
    if (text == "-inf") return -INFINITY;
    if (text == "nan") return NAN;
    return parse_real(text);
  }
  throw InvalidArgument("expected a number, got " + value.dump());
}

Json estimate_to_json(const Estimate& estimate) {
  Json out;
  out["value"] = json_real(estimate.value);
  if (!estimate.is_exact()) out["ci"] = Json::array({json_real(estimate.lo), json_real(estimate.hi)});
  return out;
}

Json engine_to_json(const Engine& engine) {
  Json out;
  if (const auto* exact = std::get_if<ExactEngine>(&engine)) {
    out["type"] = "exact";
    out["budget"] = exact->budget;
  } else {
    const auto& mc = std::get<MonteCarloEngine>(engine);
    out["type"] = "mc";
    out["seed"] = mc.seed;
    out["samples"] = mc.samples;
  }
  return out;
}

Engine engine_from_json(const Json& value) {
  const auto type = value.value("type", std::string("exact"));
  if (type == "exact") return ExactEngine{value.value("budget", ExactEngine{}.budget)};
  if (type == "mc") {
    return MonteCarloEngine{value.value("seed", std::uint64_t{0}),
                            value.value("samples", MonteCarloEngine{}.samples)};
  }
  throw InvalidArgument("unknown engine type '" + type + "'");
}

Json to_json(const InequalityReport& report) {
  Json out;
  out["inequality"] = report.inequality;
  out["instance"] = report.instance;
  out["params"] = report.params;
  out["engine"] = engine_to_json(report.engine);
  out["lhs"] = estimate_to_json(report.lhs);
  out["rhs"] = estimate_to_json(report.rhs);
  out["slack"] = json_real(report.slack);
  out["verdict"] = to_string(report.verdict);
  out["runtime_ms"] = report.runtime_ms;
  out["details"] = report.details;
  if (!report.warnings.empty()) out["warnings"] = report.warnings;
  return out;
}

void BatterySummary::add(Verdict verdict) {
  ++total;
  switch (verdict) {
    case Verdict::holds: ++holds; break;
    case Verdict::violated: ++violated; break;
    case Verdict::indeterminate: ++indeterminate; break;
  }
}

BatterySummary summarize(const std::vector<InequalityReport>& reports) {
  BatterySummary summary;
  for (const auto& r : reports) summary.add(r.verdict);
  return summary;
}

Json to_json(const BatterySummary& summary) {
  Json out;
  out["total"] = summary.total;
  out["holds"] = summary.holds;
  out["violated"] = summary.violated;
  out["indeterminate"] = summary.indeterminate;
  return out;
}

Json battery_to_json(const std::vector<InequalityReport>& reports) {
  Json out;
  out["reports"] = Json::array();
  for (const auto& r : reports) out["reports"].push_back(to_json(r));
  out["summary"] = to_json(summarize(reports));
  return out;
}

std::string csv_header() { return "inequality,instance,lhs,rhs,slack,verdict,engine,seed"; }

namespace {

std::string csv_real(double value) {
  if (std::isinf(value)) return value > 0 ? "+inf" : "-inf";
  if (std::isnan(value)) return "nan";
  return format_real(value);
}

}  // namespace

std::string to_csv_row(const InequalityReport& report) {
  std::string seed;
  if (const auto* mc = std::get_if<MonteCarloEngine>(&report.engine)) seed = std::to_string(mc->seed);
  return report.inequality + "," + report.instance + "," + csv_real(report.lhs.value) + "," +
         csv_real(report.rhs.value) + "," + csv_real(report.slack) + "," +
         to_string(report.verdict) + "," + engine_type(report.engine) + "," + seed;
}

Json model_to_json(const PathModel& model) {
  Json out;
  out["n"] = model.length();
  out["dists"] = Json::array();
  for (const auto& v : model.variables) out["dists"].push_back(v.to_string());
  out["z0"] = model.instance().encode(model.z0);
  out["z1"] = model.instance().encode(model.z1);
  out["orientation"] = to_string(model.orientation);
  return out;
}

}  // namespace semilab
