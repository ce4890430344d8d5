#include "semilab/probability/engine.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "semilab/error.hpp"
#include "semilab/parallel.hpp"

namespace semilab {

std::string engine_type(const Engine& engine) { return is_exact(engine) ? "exact" : "mc"; }

void PathModel::validate() const {
  if (variables.empty()) throw InvalidArgument("path model needs at least one variable");
  const auto* inst = &variables.front().instance();
  for (const auto& v : variables) {
    if (&v.instance() != inst) throw InvalidArgument("variables live on different instances");
  }
  inst->validate(z0);
  inst->validate(z1);
}

std::uint64_t outcome_count(const PathModel& model) {
  std::uint64_t total = 1;
  for (const auto& v : model.variables) {
    const auto size = static_cast<std::uint64_t>(v.size());
    if (total > std::numeric_limits<std::uint64_t>::max() / size) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= size;
  }
  return total;
}

void require_budget(const PathModel& model, const ExactEngine& engine) {
  const auto count = outcome_count(model);
  if (count > engine.budget) throw BudgetExceeded(count, engine.budget);
}

namespace {

std::size_t resolve_workers(std::size_t workers) {
  return workers == 0 ? default_parallelism() : workers;
}

// Walks outcomes [begin, end) of the mixed-radix product space.
class OutcomeCursor {
 public:
  OutcomeCursor(const PathModel& model, std::uint64_t index)
      : model_(model), digits_(model.length()), xs_(model.length()) {
    for (std::size_t j = model.length(); j-- > 0;) {
      const auto radix = static_cast<std::uint64_t>(model.variables[j].size());
      digits_[j] = static_cast<std::size_t>(index % radix);
      index /= radix;
    }
    for (std::size_t j = 0; j < xs_.size(); ++j) xs_[j] = support(j);
  }

  std::span<const Element> xs() const { return xs_; }

  double weight() const {
    double w = 1.0;
    for (std::size_t j = 0; j < digits_.size(); ++j) {
      w *= model_.variables[j].weights()[digits_[j]];
    }
    return w;
  }

  void advance() {
    for (std::size_t j = digits_.size(); j-- > 0;) {
      if (++digits_[j] < model_.variables[j].size()) {
        xs_[j] = support(j);
        return;
      }
      digits_[j] = 0;
      xs_[j] = support(j);
    }
  }

 private:
  const Element& support(std::size_t j) const { return model_.variables[j].support()[digits_[j]]; }

  const PathModel& model_;
  std::vector<std::size_t> digits_;
  std::vector<Element> xs_;
};

// Outcome weights are grouped by value with integer multiplicities, so the
// total is independent of visiting order and of how outcomes are split.
using WeightCounts = std::map<double, std::uint64_t>;

double total_of(const WeightCounts& counts) {
  std::vector<double> terms;
  terms.reserve(counts.size());
  for (const auto& [w, c] : counts) terms.push_back(w * static_cast<double>(c));
  return sorted_sum(terms);
}

template <typename Visit>
void enumerate_blocks(const PathModel& model, std::size_t workers, Visit&& visit) {
  const auto total = outcome_count(model);
  const auto blocks = (total + kExactBlock - 1) / kExactBlock;
  parallel_for(static_cast<std::size_t>(blocks), resolve_workers(workers),
               [&](std::size_t block, std::size_t worker) {
                 const auto begin = static_cast<std::uint64_t>(block) * kExactBlock;
                 const auto end = std::min(total, begin + kExactBlock);
                 OutcomeCursor cursor(model, begin);
                 PathStatistics stats;
                 for (auto i = begin; i < end; ++i) {
                   compute_path_statistics(model.instance(), cursor.xs(), model.z0, model.z1,
                                           model.orientation, stats);
                   visit(worker, stats, cursor.weight());
                   if (i + 1 < end) cursor.advance();
                 }
               });
}

std::vector<double> exact_probabilities(const PathModel& model, std::span<const PathEvent> events,
                                        const ExactEngine& engine, std::size_t workers) {
  model.validate();
  require_budget(model, engine);
  const auto pool = effective_workers(
      static_cast<std::size_t>((outcome_count(model) + kExactBlock - 1) / kExactBlock),
      resolve_workers(workers));
  std::vector<std::vector<WeightCounts>> counts(pool, std::vector<WeightCounts>(events.size()));
  enumerate_blocks(model, pool, [&](std::size_t worker, const PathStatistics& stats, double w) {
    for (std::size_t e = 0; e < events.size(); ++e) {
      if (events[e](stats)) ++counts[worker][e][w];
    }
  });
  const auto outcomes = outcome_count(model);
  std::vector<double> out(events.size());
  for (std::size_t e = 0; e < events.size(); ++e) {
    WeightCounts merged;
    std::uint64_t hits = 0;
    for (const auto& per_worker : counts) {
      for (const auto& [w, c] : per_worker[e]) {
        merged[w] += c;
        hits += c;
      }
    }
    // The weights only sum to 1 up to rounding; the sure event is exactly 1.
    out[e] = hits == outcomes ? 1.0 : std::clamp(total_of(merged), 0.0, 1.0);
  }
  return out;
}

std::vector<Estimate> mc_probabilities(const PathModel& model, std::span<const PathEvent> events,
                                       const MonteCarloEngine& engine, std::size_t workers) {
  model.validate();
  if (engine.samples == 0) throw InvalidArgument("Monte Carlo needs samples >= 1");
  const auto chunks = static_cast<std::size_t>((engine.samples + kMonteCarloChunk - 1) /
                                               kMonteCarloChunk);
  const auto pool = effective_workers(chunks, resolve_workers(workers));
  std::vector<std::vector<std::uint64_t>> hits(pool, std::vector<std::uint64_t>(events.size()));
  parallel_for(chunks, pool, [&](std::size_t chunk, std::size_t worker) {
    Rng rng(derive_seed(engine.seed, chunk));
    const auto begin = static_cast<std::uint64_t>(chunk) * kMonteCarloChunk;
    const auto end = std::min(engine.samples, begin + kMonteCarloChunk);
    std::vector<Element> xs(model.length());
    PathStatistics stats;
    for (auto i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        const auto& law = model.variables[j];
        xs[j] = law.support()[law.sample_index(rng)];
      }
      compute_path_statistics(model.instance(), xs, model.z0, model.z1, model.orientation, stats);
      for (std::size_t e = 0; e < events.size(); ++e) {
        if (events[e](stats)) ++hits[worker][e];
      }
    }
  });
  std::vector<Estimate> out(events.size());
  for (std::size_t e = 0; e < events.size(); ++e) {
    std::uint64_t total = 0;
    for (const auto& per_worker : hits) total += per_worker[e];
    out[e] = hoeffding_estimate(total, engine.samples);
  }
  return out;
}

}  // namespace

std::vector<Estimate> event_probabilities(const PathModel& model,
                                          std::span<const PathEvent> events,
                                          const Engine& engine, std::size_t workers) {
  if (const auto* exact = std::get_if<ExactEngine>(&engine)) {
    const auto values = exact_probabilities(model, events, *exact, workers);
    std::vector<Estimate> out;
    out.reserve(values.size());
    for (double v : values) out.push_back(Estimate::exact(v));
    return out;
  }
  return mc_probabilities(model, events, std::get<MonteCarloEngine>(engine), workers);
}

double exact_event_prob(const PathModel& model, const PathEvent& event, const ExactEngine& engine,
                        std::size_t workers) {
  return exact_probabilities(model, std::span(&event, 1), engine, workers).front();
}

Estimate mc_event_prob(const PathModel& model, const PathEvent& event,
                       const MonteCarloEngine& engine, std::size_t workers) {
  return mc_probabilities(model, std::span(&event, 1), engine, workers).front();
}

std::vector<DiscreteLaw> exact_laws(const PathModel& model,
                                    std::span<const PathFunctional> functionals,
                                    const ExactEngine& engine, std::size_t workers) {
  model.validate();
  require_budget(model, engine);
  const auto pool = effective_workers(
      static_cast<std::size_t>((outcome_count(model) + kExactBlock - 1) / kExactBlock),
      resolve_workers(workers));
  using Atoms = std::vector<std::pair<double, double>>;
  std::vector<std::vector<Atoms>> atoms(pool, std::vector<Atoms>(functionals.size()));
  enumerate_blocks(model, pool, [&](std::size_t worker, const PathStatistics& stats, double w) {
    for (std::size_t f = 0; f < functionals.size(); ++f) {
      atoms[worker][f].emplace_back(functionals[f](stats), w);
    }
  });
  std::vector<DiscreteLaw> out;
  out.reserve(functionals.size());
  for (std::size_t f = 0; f < functionals.size(); ++f) {
    Atoms merged;
    for (auto& per_worker : atoms) {
      merged.insert(merged.end(), per_worker[f].begin(), per_worker[f].end());
    }
    out.push_back(DiscreteLaw::from_atoms(std::move(merged)));
  }
  return out;
}

DiscreteLaw exact_law(const PathModel& model, const PathFunctional& functional,
                      const ExactEngine& engine, std::size_t workers) {
  return exact_laws(model, std::span(&functional, 1), engine, workers).front();
}

void for_each_outcome(const PathModel& model, const ExactEngine& engine,
                      const std::function<void(std::span<const Element> xs,
                                               const PathStatistics& stats, double weight)>& visit) {
  model.validate();
  require_budget(model, engine);
  const auto total = outcome_count(model);
  OutcomeCursor cursor(model, 0);
  PathStatistics stats;
  for (std::uint64_t i = 0; i < total; ++i) {
    compute_path_statistics(model.instance(), cursor.xs(), model.z0, model.z1, model.orientation,
                            stats);
    visit(cursor.xs(), stats, cursor.weight());
    if (i + 1 < total) cursor.advance();
  }
}

}  // namespace semilab
