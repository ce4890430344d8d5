#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "semilab/probability/distribution.hpp"
#include "semilab/probability/estimate.hpp"
#include "semilab/probability/law.hpp"
#include "semilab/probability/path.hpp"

namespace semilab {

struct ExactEngine {
  std::uint64_t budget = 1'000'000;
};

struct MonteCarloEngine {
  std::uint64_t seed = 0;
  std::uint64_t samples = 100'000;
};

using Engine = std::variant<ExactEngine, MonteCarloEngine>;

inline bool is_exact(const Engine& engine) {
  return std::holds_alternative<ExactEngine>(engine);
}
std::string engine_type(const Engine& engine);

// Independent X_1..X_n (product measure) with base points and orientation.
struct PathModel {
  std::vector<FiniteDistribution> variables;
  Element z0;
  Element z1;
  Orientation orientation = Orientation::left;

  const MetricSemigroup& instance() const { return variables.front().instance(); }
  const InstancePtr& instance_ptr() const { return variables.front().instance_ptr(); }
  std::size_t length() const { return variables.size(); }

  // Nonempty, one instance throughout, valid base points.
  void validate() const;
};

using PathEvent = std::function<bool(const PathStatistics&)>;
using PathFunctional = std::function<double(const PathStatistics&)>;

// Product of the support sizes, saturating at UINT64_MAX.
std::uint64_t outcome_count(const PathModel& model);

// Throws BudgetExceeded when the product space exceeds the budget.
void require_budget(const PathModel& model, const ExactEngine& engine);

// P(event) for each event under one pass over the outcomes (exact) or over
// one shared sample (Monte Carlo). Exact results are degenerate estimates.
// Results do not depend on `workers`.
std::vector<Estimate> event_probabilities(const PathModel& model,
                                          std::span<const PathEvent> events,
                                          const Engine& engine, std::size_t workers = 0);

double exact_event_prob(const PathModel& model, const PathEvent& event,
                        const ExactEngine& engine = {}, std::size_t workers = 0);

Estimate mc_event_prob(const PathModel& model, const PathEvent& event,
                       const MonteCarloEngine& engine, std::size_t workers = 0);

// Exact laws of real functionals of the path.
std::vector<DiscreteLaw> exact_laws(const PathModel& model,
                                    std::span<const PathFunctional> functionals,
                                    const ExactEngine& engine = {}, std::size_t workers = 0);

DiscreteLaw exact_law(const PathModel& model, const PathFunctional& functional,
                      const ExactEngine& engine = {}, std::size_t workers = 0);

// Sequential visit of every outcome with its probability, in mixed-radix
// order (X_1 most significant). For tests and diagnostics.
void for_each_outcome(const PathModel& model, const ExactEngine& engine,
                      const std::function<void(std::span<const Element> xs,
                                               const PathStatistics& stats, double weight)>& visit);

// Monte Carlo chunk size; chunk c is drawn from derive_seed(seed, c).
inline constexpr std::uint64_t kMonteCarloChunk = 1024;
// Exact enumeration is split into blocks of this many outcomes.
inline constexpr std::uint64_t kExactBlock = 4096;

}  // namespace semilab
