#pragma once

#include <cstddef>
#include <vector>

#include "semilab/inequalities/report.hpp"

namespace semilab {

// Real-line hypotheses shared by js_bound and kn_bounds: the instance is
// euclidean1 and z0 = z1 = 0.
bool is_real_line(const MetricSemigroup& instance);

// Exactly invariant under x -> -x, weights included.
bool is_symmetric(const FiniteDistribution& law);
bool is_nonnegative(const FiniteDistribution& law);

// P(U_n > (2k-1)t) <= P(M_n > t) + P(U_n > t)^k for nonnegative summands,
// t > 0. The details carry the weaker form obtained from hj_general with
// n_i = 1, t_1 = s = t, t_2 = ... = t_k = t/2.
InequalityReport js_bound(const PathModel& model, std::size_t k, double t, const Engine& engine,
                          std::size_t workers = 0);

// Klass-Nowicki bounds with lambda = P(U_n >= 1) < 1: one report per
// hypothesis that applies ("kn-nonnegative", "kn-symmetric"). Throws
// LambdaNotLessThanOne, or InvalidArgument when neither applies.
std::vector<InequalityReport> kn_bounds(const PathModel& model, std::size_t k,
                                        const Engine& engine, std::size_t workers = 0);

// n (1 - (1 - lambda)^(1/n)), evaluated without cancellation.
double kn_root_term(double lambda, std::size_t n);

struct KnScalarResult {
  double lhs1 = 0.0;  // (1/k!) [n (1 - (1-lambda)^(1/n))]^k
  double rhs1 = 0.0;  // (1/k!) (lambda / (1 - lambda))^k
  bool first_holds = false;
  double doubled = 0.0;  // 2^(1 - 1/k) n (1 - lambda) (1 - (1-lambda)^(1/n))
  bool doubled_variant_exceeds = false;  // doubled > lambda
};

KnScalarResult kn_scalar_lemma(double lambda, std::size_t n, std::size_t k);

}  // namespace semilab
