#include "semilab/probability/levy.hpp"

#include <algorithm>

#include "semilab/error.hpp"

namespace semilab {

const LevyRow& LevyReport::at(std::size_t n, std::size_t eps_index) const {
  if (n < 1 || n > horizon || eps_index >= epsilons.size()) {
    throw InvalidArgument("levy row out of range");
  }
  return rows[(n - 1) * epsilons.size() + eps_index];
}

LevyReport levy_diagnostic(const LawSequence& laws, std::size_t horizon,
                           const std::vector<double>& epsilons, const Element& z0,
                           const Element& z1, const Engine& engine, Orientation orientation,
                           std::size_t workers) {
  if (horizon < 2) throw InvalidArgument("levy diagnostic needs horizon >= 2");
  if (epsilons.empty()) throw InvalidArgument("levy diagnostic needs an epsilon grid");
  PathModel model{{}, z0, z1, orientation};
  for (std::size_t n = 1; n <= horizon; ++n) model.variables.push_back(laws(n));

  std::vector<PathEvent> events;
  for (std::size_t n = 1; n <= horizon; ++n) {
    for (double eps : epsilons) {
      events.emplace_back([n, eps](const PathStatistics& s) { return s.to_end[n - 1] > eps; });
      events.emplace_back([n, eps](const PathStatistics& s) {
        return *std::max_element(s.to_end.begin() + static_cast<std::ptrdiff_t>(n - 1),
                                 s.to_end.end()) > eps;
      });
    }
  }
  const auto probs = event_probabilities(model, events, engine, workers);

  LevyReport report;
  report.horizon = horizon;
  report.epsilons = epsilons;
  std::size_t e = 0;
  for (std::size_t n = 1; n <= horizon; ++n) {
    for (double eps : epsilons) {
      report.rows.push_back({n, eps, probs[e], probs[e + 1]});
      e += 2;
    }
  }
  return report;
}

}  // namespace semilab
