#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "semilab/inequalities/report.hpp"

namespace semilab {

// P(max_k d(z1, z0 S_k) >= alpha + beta) * min_k P(d(S_k, S_n) <= beta)
//   <= P(d(z1, z0 S_n) >= alpha), alpha, beta > 0.
InequalityReport ottaviani_skorohod(const PathModel& model, double alpha, double beta,
                                    const Engine& engine, std::size_t workers = 0);

enum class MogulskiiVariant { min, max };

std::string to_string(MogulskiiVariant variant);
MogulskiiVariant parse_mogulskii_variant(std::string_view text);

// min: P(min_{m<=k<=n} R_k <= a) * min_{m<=k<=n} P(D_k <= b) <= P(R_n <= a + b)
// max: P(max_{m<=k<=n} R_k >= a) * min_{m<=k<=n} P(D_k <= b) <= P(R_n >= a - b)
// with R_k = d(z1, z0 S_k), D_k = d(S_k, S_n); a - b < 0 gives rhs = 1.
InequalityReport mogulskii(const PathModel& model, std::size_t m, double a, double b,
                           MogulskiiVariant variant, const Engine& engine,
                           std::size_t workers = 0);

// P(U_n > a_1 + ... + a_l) <= sum_{i=2}^l p_{a_i} + p'_l, l >= 2, where
// p_a = max_k P(R_k > a) and p'_l = p_{a_1} (l odd) or max_k P(D_k > a_1)
// (l even).
InequalityReport levy_ottaviani(const PathModel& model, const std::vector<double>& a,
                                const Engine& engine, std::size_t workers = 0);

}  // namespace semilab
