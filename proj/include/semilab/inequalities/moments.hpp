#pragma once

#include <cstddef>

#include "semilab/inequalities/report.hpp"

namespace semilab {

// E[U_n^p] <= 2^(1+2p) (E[M_n^p] + U_n*(2^(-1-2p))^p), p > 0. Needs the
// exact engine: the rearrangement is taken of the full law of U_n.
InequalityReport moment_bound(const PathModel& model, double p, const Engine& engine,
                              std::size_t workers = 0);

// Ingredients of the rearrangement comparison between U_n*(t), U_n*(s) and
// M_n*(t/2). Nothing is asserted: the constant c_1 has no stated value, so
// only the smallest c_1 that works for this input is reported.
struct RearrangementRatio {
  double t = 0.0;
  double s = 0.0;
  double u_t = 0.0;       // U_n*(t)
  double u_s = 0.0;       // U_n*(s)
  double m_half_t = 0.0;  // M_n*(t/2)
  double log_factor = 0.0;  // log(1/t) / max{log(1/s), log log(4/t)}
  // u_t / (log_factor (u_s + m_half_t)); 0 when u_t = 0 or t = 0,
  // +inf when the denominator vanishes otherwise.
  double minimal_c1 = 0.0;
  Json params = Json::object();
  std::string instance;
};

// 0 <= t <= s <= 1/2; exact engine only.
RearrangementRatio rearrangement_ratio(const PathModel& model, double t, double s,
                                       const Engine& engine, std::size_t workers = 0);

Json to_json(const RearrangementRatio& ratio);

}  // namespace semilab
