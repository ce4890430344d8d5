#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "semilab/probability/engine.hpp"

namespace semilab {

using Json = nlohmann::ordered_json;

enum class Verdict { holds, violated, indeterminate };

std::string to_string(Verdict verdict);

// Exact: holds iff lhs <= rhs. Monte Carlo: holds iff lhs.hi <= rhs.lo,
// violated iff lhs.lo > rhs.hi, indeterminate otherwise.
Verdict decide(const Estimate& lhs, const Estimate& rhs, bool exact);

struct InequalityReport {
  std::string inequality;
  std::string instance;
  Json params = Json::object();  // enough to re-run the check
  Engine engine = ExactEngine{};
  Estimate lhs;
  Estimate rhs;
  double slack = 0.0;  // rhs - lhs
  Verdict verdict = Verdict::holds;
  double runtime_ms = 0.0;
  Json details = Json::object();
  std::vector<std::string> warnings;

  // Sets slack and verdict from lhs, rhs and the engine.
  void conclude();
};

// Reals serialize as JSON numbers, except +-inf and nan as strings.
Json json_real(double value);
double real_from_json(const Json& value);

Json estimate_to_json(const Estimate& estimate);
Json engine_to_json(const Engine& engine);
Engine engine_from_json(const Json& value);

// Fields in the fixed order inequality, instance, params, engine, lhs, rhs,
// slack, verdict, runtime_ms, details[, warnings].
Json to_json(const InequalityReport& report);

struct BatterySummary {
  std::size_t total = 0;
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t indeterminate = 0;

  void add(Verdict verdict);
};

BatterySummary summarize(const std::vector<InequalityReport>& reports);
Json to_json(const BatterySummary& summary);

// {"reports": [...], "summary": {...}}
Json battery_to_json(const std::vector<InequalityReport>& reports);

// Columns: inequality,instance,lhs,rhs,slack,verdict,engine,seed.
std::string csv_header();
std::string to_csv_row(const InequalityReport& report);

// Echo of the path model: n, dists, z0, z1, orientation.
Json model_to_json(const PathModel& model);

}  // namespace semilab
