#pragma once

#include <chrono>
#include <cmath>
#include <string>

#include "semilab/inequalities/report.hpp"

namespace semilab::detail {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline InequalityReport start_report(std::string name, const PathModel& model,
                                     const Engine& engine) {
  model.validate();
  InequalityReport report;
  report.inequality = std::move(name);
  report.instance = model.instance().name();
  report.params = model_to_json(model);
  report.engine = engine;
  return report;
}

// The statements are proved for strongly left (right) invariant metrics;
// other instances are still evaluated, with a warning attached.
inline void warn_unless_strong(InequalityReport& report, const PathModel& model) {
  const auto& a = model.instance().annotations();
  const bool strong = model.orientation == Orientation::left ? a.strong_left : a.strong_right;
  if (!strong) {
    report.warnings.push_back(model.instance().name() + " is not annotated strongly " +
                              to_string(model.orientation) + "-invariant");
  }
}

inline double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

inline void finish(InequalityReport& report, const Stopwatch& clock) {
  report.conclude();
  report.runtime_ms = clock.elapsed_ms();
}

inline Json estimate_json(const Estimate& e) { return estimate_to_json(e); }

}  // namespace semilab::detail
