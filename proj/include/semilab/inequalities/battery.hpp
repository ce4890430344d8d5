#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semilab/inequalities/report.hpp"

namespace semilab {

// One randomly drawn check: a path model plus the parameters of one
// inequality, ready for run_inequality.
struct Trial {
  std::string checker;     // battery checker name, e.g. "mogulskii-max"
  std::string inequality;  // registry name, e.g. "mogulskii"
  PathModel model;
  Json params;
};

// Battery checker names. Variants of one inequality are separate checkers:
// hj-general, hj-general-strengthened, hj-lt, hj-hm, js, kn,
// ottaviani-skorohod, mogulskii-min, mogulskii-max, levy-ottaviani-{2,3,4},
// moment-{0.5,1,2}.
const std::vector<std::string>& battery_checkers();

// Instances the exact battery runs on.
const std::vector<std::string>& battery_instances();

// js and kn only apply on euclidean1.
bool checker_applies(std::string_view checker, const MetricSemigroup& instance);

// Draws n <= 6 variables with at most 3 lattice support points each and
// dyadic weights (multiples of 1/16), base points, and parameters on a
// threshold grid built from the atoms of U_n and M_n (the atoms, their
// midpoints and halves). Returns nullopt when no admissible draw was found.
std::optional<Trial> draw_trial(std::string_view checker, const InstancePtr& instance, Rng& rng);

std::vector<InequalityReport> run_trial(const Trial& trial, const Engine& engine = ExactEngine{},
                                        std::size_t workers = 1);

struct BatteryOptions {
  std::uint64_t seed = 1;
  std::size_t configs = 50;  // per (checker, instance) cell
  std::vector<std::string> checkers = battery_checkers();
  std::vector<std::string> instances = battery_instances();
  std::size_t workers = 0;
};

struct BatteryEntry {
  std::string checker;
  std::string instance;
  std::size_t trial = 0;
  std::vector<InequalityReport> reports;
  std::optional<std::string> error;
};

struct BatteryResult {
  std::vector<BatteryEntry> entries;  // cell-major, trial order

  std::vector<InequalityReport> reports() const;
  BatterySummary summary() const;
  std::size_t errors() const;
};

// Exact engine throughout. Trial seeds derive from (seed, cell, trial);
// entries are merged in that order whatever the worker count.
BatteryResult run_battery(const BatteryOptions& options);

// Random trials of one checker on one instance; returns the violated
// reports, each shrunk greedily (dropping support points, then trailing
// variables) while it stays violated.
std::vector<InequalityReport> stress_search(const InstancePtr& instance, std::string_view checker,
                                            std::uint64_t seed, std::size_t trials,
                                            std::size_t workers = 0);

}  // namespace semilab
