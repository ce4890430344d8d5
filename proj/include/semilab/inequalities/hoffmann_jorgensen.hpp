#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "semilab/inequalities/report.hpp"

namespace semilab {

struct HJParams {
  std::vector<std::size_t> n;  // n_1..n_k, each >= 1
  std::vector<double> t;       // t_1..t_k, each >= 0
  double s = 0.0;
  // Replace P(M_n > s) by P(Y_(n-K+2) + ... + Y_(n) > (K - 1) s).
  bool strengthened = false;

  std::size_t k() const { return n.size(); }
  std::size_t K() const;
};

// (2 n_1 - 1) t_1 + 2 sum_{i>=2} n_i t_i + (K - 1) s.
double hj_threshold(const HJParams& params);

// 1-based i with pU_i^(n_i - [i == 1]) <= 1 / n_i!, where 0^0 = 1.
std::vector<std::size_t> i0_set(std::span<const double> p_le, std::span<const std::size_t> n);

// P(U_n > threshold) against the product bound plus the increment tail.
// Requires K <= n + 1.
InequalityReport hj_general(const PathModel& model, const HJParams& params, const Engine& engine,
                            std::size_t workers = 0);

// P(U_n > 3t + s) <= P(U_n > t)^2 + P(M_n > s), t, s > 0. The details
// compare against hj_general with k = 2, n = (1, 1), t_1 = t_2 = t.
InequalityReport hj_lt(const PathModel& model, double t, double s, const Engine& engine,
                       std::size_t workers = 0);

// P(U_n > 2Kt + (K-1)s) <= (1/K!) (P(U_n > t) / P(U_n <= t))^K + P(M_n > s).
// The details compare against hj_general with k = 1, n_1 = K, t_1 = t.
InequalityReport hj_hm(const PathModel& model, std::size_t K, double t, double s,
                       const Engine& engine, std::size_t workers = 0);

// Tolerance of the specialization comparisons.
inline constexpr double kSpecializationTolerance = 1e-12;

}  // namespace semilab
