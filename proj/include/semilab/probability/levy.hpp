#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "semilab/probability/engine.hpp"

namespace semilab {

struct LevyRow {
  std::size_t n = 0;
  double epsilon = 0.0;
  Estimate to_end;  // P(d(S_n, S_N) > eps)
  Estimate window;  // P(max_{n <= m <= N} d(S_m, S_N) > eps)
};

struct LevyReport {
  std::size_t horizon = 0;
  std::vector<double> epsilons;
  std::vector<LevyRow> rows;  // n-major, epsilons in given order

  const LevyRow& at(std::size_t n, std::size_t eps_index) const;
};

// Law of X_n for n = 1..N.
using LawSequence = std::function<FiniteDistribution(std::size_t n)>;

// Tail table of the distance from S_n to the horizon value S_N. Report only;
// it asserts nothing about convergence. z0 and z1 only complete the model.
LevyReport levy_diagnostic(const LawSequence& laws, std::size_t horizon,
                           const std::vector<double>& epsilons, const Element& z0,
                           const Element& z1, const Engine& engine,
                           Orientation orientation = Orientation::left, std::size_t workers = 0);

}  // namespace semilab
