#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "semilab/inequalities/battery.hpp"
#include "semilab/inequalities/classical.hpp"
#include "semilab/inequalities/hoffmann_jorgensen.hpp"
#include "semilab/inequalities/maximal.hpp"
#include "semilab/inequalities/moments.hpp"
#include "semilab/inequalities/registry.hpp"

using namespace semilab;
using helpers::model;
using oracle::Path;

namespace {

const ExactEngine kExact{};

PathModel bernoulli_pair() { return model("euclidean1", "0:0.5,1:0.5", 2); }

struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
};

double p_of(const std::vector<Path>& paths, const std::function<bool(const Path&)>& e) {
  return oracle::prob(paths, e);
}

Sides oracle_hj_general(const std::vector<Path>& P, const std::vector<std::size_t>& n,
                        const std::vector<double>& t, double s, bool strengthened) {
  std::size_t K = 0;
  for (auto ni : n) K += ni;
  double thr = (2.0 * static_cast<double>(n[0]) - 1.0) * t[0];
  for (std::size_t i = 1; i < n.size(); ++i) thr += 2.0 * static_cast<double>(n[i]) * t[i];
  thr += static_cast<double>(K - 1) * s;
  Sides out;
  out.lhs = p_of(P, [&](const Path& p) { return p.U > thr; });
  double product = 1.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double le = p_of(P, [&](const Path& p) { return p.U <= t[i]; });
    const double gt = p_of(P, [&](const Path& p) { return p.U > t[i]; });
    const double exponent = static_cast<double>(n[i]) - (i == 0 ? 1.0 : 0.0);
    const double base = exponent == 0.0 ? 1.0 : std::pow(le, exponent);
    const bool in_i0 = base <= 1.0 / oracle::factorial(n[i]);
    if (in_i0) {
      product *= std::pow(gt, static_cast<double>(n[i]));
    } else {
      if (i == 0) product *= le;
      product *= std::pow(gt / le, static_cast<double>(n[i])) / oracle::factorial(n[i]);
    }
  }
  const double tail =
      strengthened
          ? p_of(P, [&](const Path& p) { return p.top(K - 1) > static_cast<double>(K - 1) * s; })
          : p_of(P, [&](const Path& p) { return p.M > s; });
  out.rhs = product + tail;
  return out;
}

Sides oracle_hj_lt(const std::vector<Path>& P, double t, double s) {
  const double gt = p_of(P, [&](const Path& p) { return p.U > t; });
  return {p_of(P, [&](const Path& p) { return p.U > 3 * t + s; }),
          gt * gt + p_of(P, [&](const Path& p) { return p.M > s; })};
}

Sides oracle_hj_hm(const std::vector<Path>& P, std::size_t K, double t, double s) {
  const double Kd = static_cast<double>(K);
  const double gt = p_of(P, [&](const Path& p) { return p.U > t; });
  const double le = p_of(P, [&](const Path& p) { return p.U <= t; });
  return {p_of(P, [&](const Path& p) { return p.U > 2 * Kd * t + (Kd - 1) * s; }),
          std::pow(gt / le, Kd) / oracle::factorial(K) + p_of(P, [&](const Path& p) { return p.M > s; })};
}

Sides oracle_os(const std::vector<Path>& P, double a, double b) {
  const std::size_t n = P.front().R.size();
  double worst = 1.0;
  for (std::size_t k = 0; k < n; ++k) worst = std::min(worst, p_of(P, [&](const Path& p) { return p.D[k] <= b; }));
  return {p_of(P, [&](const Path& p) { return p.U >= a + b; }) * worst,
          p_of(P, [&](const Path& p) { return p.R.back() >= a; })};
}

Sides oracle_mogulskii(const std::vector<Path>& P, std::size_t m, double a, double b, bool max_variant) {
  const std::size_t n = P.front().R.size();
  double worst = 1.0;
  for (std::size_t k = m - 1; k < n; ++k) {
    worst = std::min(worst, p_of(P, [&](const Path& p) { return p.D[k] <= b; }));
  }
  auto window = [&](const Path& p, bool want_max) {
    double v = p.R[m - 1];
    for (std::size_t k = m - 1; k < n; ++k) v = want_max ? std::max(v, p.R[k]) : std::min(v, p.R[k]);
    return v;
  };
  if (max_variant) {
    return {p_of(P, [&](const Path& p) { return window(p, true) >= a; }) * worst,
            a - b < 0 ? 1.0 : p_of(P, [&](const Path& p) { return p.R.back() >= a - b; })};
  }
  return {p_of(P, [&](const Path& p) { return window(p, false) <= a; }) * worst,
          p_of(P, [&](const Path& p) { return p.R.back() <= a + b; })};
}

Sides oracle_levy_ottaviani(const std::vector<Path>& P, const std::vector<double>& a) {
  const std::size_t n = P.front().R.size();
  auto p_a = [&](double x) {
    double best = 0.0;
    for (std::size_t k = 0; k < n; ++k) best = std::max(best, p_of(P, [&](const Path& p) { return p.R[k] > x; }));
    return best;
  };
  double total = 0.0;
  for (double x : a) total += x;
  double rhs = 0.0;
  for (std::size_t i = 1; i < a.size(); ++i) rhs += p_a(a[i]);
  if (a.size() % 2 == 1) {
    rhs += p_a(a[0]);
  } else {
    double best = 0.0;
    for (std::size_t k = 0; k < n; ++k) best = std::max(best, p_of(P, [&](const Path& p) { return p.D[k] > a[0]; }));
    rhs += best;
  }
  return {p_of(P, [&](const Path& p) { return p.U > total; }), rhs};
}

Sides oracle_moment(const std::vector<Path>& P, double p) {
  const double c = std::pow(2.0, 1.0 + 2.0 * p);
  const double level = std::pow(2.0, -1.0 - 2.0 * p);
  const double u_star = oracle::rearrangement(P, [](const Path& x) { return x.U; }, level);
  return {oracle::expect(P, [&](const Path& x) { return std::pow(x.U, p); }),
          c * (oracle::expect(P, [&](const Path& x) { return std::pow(x.M, p); }) + std::pow(u_star, p))};
}

// True when some path functional the checker thresholds lies within 1e-9
// of one of `levels`; such draws could round differently in the oracle.
bool near_edge(const std::vector<Path>& P, const std::vector<double>& levels) {
  for (const auto& p : P) {
    std::vector<double> values = p.R;
    values.insert(values.end(), p.D.begin(), p.D.end());
    values.insert(values.end(), p.Y.begin(), p.Y.end());
    auto y = p.Y;
    std::sort(y.begin(), y.end(), std::greater<>());
    double acc = 0.0;
    for (double v : y) values.push_back(acc += v);
    for (double v : values) {
      for (double l : levels) {
        if (l > 0.0 && std::fabs(v - l) < 1e-9) return true;
      }
    }
  }
  return false;
}

void expect_sides(const InequalityReport& r, const Sides& o, const std::string& what) {
  EXPECT_NEAR(r.lhs.value, o.lhs, 1e-12) << what;
  if (std::isinf(o.rhs)) {
    EXPECT_TRUE(std::isinf(r.rhs.value)) << what;
  } else {
    EXPECT_NEAR(r.rhs.value, o.rhs, 1e-12 * (1.0 + std::fabs(o.rhs))) << what;
  }
  EXPECT_EQ(r.verdict, Verdict::holds) << what;
  EXPECT_GE(r.slack, 0.0) << what;
}

}  // namespace

TEST(I0Set, Examples) {
  const std::vector<double> quarter{0.25, 0.25};
  const std::vector<std::size_t> ones{1, 1};
  EXPECT_EQ(i0_set(quarter, ones), (std::vector<std::size_t>{1, 2}));
  const std::vector<double> one{1.0};
  for (std::size_t K = 2; K <= 5; ++K) {
    const std::vector<std::size_t> nk{K};
    EXPECT_TRUE(i0_set(one, nk).empty());
  }
  const std::vector<double> zero{0.0};
  const std::vector<std::size_t> n1{1};
  EXPECT_EQ(i0_set(zero, n1), (std::vector<std::size_t>{1}));
}

TEST(HJGeneral, BernoulliPair) {
  const auto r = hj_general(bernoulli_pair(), HJParams{{1, 1}, {0.3, 0.3}, 0.3, false}, kExact);
  EXPECT_EQ(r.lhs.value, 0.25);
  EXPECT_EQ(r.rhs.value, 21.0 / 16.0);
  EXPECT_EQ(r.verdict, Verdict::holds);
  const auto far = hj_general(bernoulli_pair(), HJParams{{1, 1}, {10, 10}, 10, false}, kExact);
  EXPECT_EQ(far.lhs.value, 0.0);
  EXPECT_EQ(far.verdict, Verdict::holds);
}

TEST(HJGeneral, AffineThreeSteps) {
  const auto m = model("affine", "(2,0):0.5,(0.5,1):0.5", 3);
  const auto r = hj_general(m, HJParams{{2}, {0.4}, 0.4, false}, kExact);
  expect_sides(r, oracle_hj_general(helpers::oracle_paths(m), {2}, {0.4}, 0.4, false), "affine");
  EXPECT_EQ(outcome_count(m), 8u);
}

TEST(HJGeneral, RejectsTooLargeK) {
  EXPECT_THROW(hj_general(bernoulli_pair(), HJParams{{4}, {0.3}, 0.3, false}, kExact), InvalidArgument);
  EXPECT_THROW(hj_general(bernoulli_pair(), HJParams{{1, 1}, {0.3}, 0.3, false}, kExact), InvalidArgument);
  EXPECT_THROW(hj_general(bernoulli_pair(), HJParams{{0}, {0.3}, 0.3, false}, kExact), InvalidArgument);
}

TEST(HJGeneral, WarnsOffStrongLeftInstances) {
  const auto cex = find_instance("counterexample");
  PathModel m{parse_variables(cex, "(1,0):0.5,(0,1):0.5", 2), CexWord{1, 0}, CexWord{1, 0},
              Orientation::left};
  const auto r = hj_general(m, HJParams{{1, 1}, {0.5, 0.5}, 0.5, false}, kExact);
  EXPECT_FALSE(r.warnings.empty());
}

// With K = 2 the strengthened tail P(Y_(n) > s) is P(M_n > s).
TEST(HJGeneral, StrengthenedTailAtKTwo) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = helpers::random_model("heisenberg", rng);
    const HJParams basic{{1, 1}, {0.7, 0.4}, 0.6, false};
    HJParams strong = basic;
    strong.strengthened = true;
    EXPECT_EQ(hj_general(m, basic, kExact).rhs.value, hj_general(m, strong, kExact).rhs.value);
    const HJParams one{{2}, {0.5}, 0.3, false};
    HJParams one_strong = one;
    one_strong.strengthened = true;
    if (m.length() >= 1) {
      EXPECT_EQ(hj_general(m, one, kExact).rhs.value, hj_general(m, one_strong, kExact).rhs.value);
    }
  }
}

TEST(HJLt, BernoulliPair) {
  const auto r = hj_lt(bernoulli_pair(), 0.3, 0.3, kExact);
  EXPECT_EQ(r.lhs.value, 0.25);
  EXPECT_EQ(r.rhs.value, 1.3125);
  EXPECT_TRUE(r.details.at("hj_general_k2").at("agree").get<bool>());
  EXPECT_EQ(hj_lt(bernoulli_pair(), 1e6, 0.3, kExact).lhs.value, 0.0);
  EXPECT_THROW(hj_lt(bernoulli_pair(), 0.0, 0.3, kExact), InvalidArgument);
}

TEST(HJLt, HeisenbergThreeSteps) {
  const auto m = model("heisenberg", "(1,0,0):0.5,(0,1,0):0.5", 3);
  const auto r = hj_lt(m, 0.5, 0.5, kExact);
  expect_sides(r, oracle_hj_lt(helpers::oracle_paths(m), 0.5, 0.5), "heisenberg");
}

// One step with d(z1, z0) > t: U is 1 or 0 with equal odds, so the bound
// is 1/4 against a left side of 1/2. The checker must not hide this.
TEST(HJLt, DistinctBasePointsAtOneStep) {
  auto m = model("euclidean1", "-0.5:0.5,0.5:0.5", 1);
  m.z0 = RealVector{2.0};
  m.z1 = RealVector{1.5};
  const auto r = hj_lt(m, 0.125, 0.5, kExact);
  const auto o = oracle_hj_lt(helpers::oracle_paths(m), 0.125, 0.5);
  EXPECT_EQ(o.lhs, 0.5);
  EXPECT_EQ(o.rhs, 0.25);
  EXPECT_EQ(r.lhs.value, 0.5);
  EXPECT_EQ(r.rhs.value, 0.25);
  EXPECT_EQ(r.verdict, Verdict::violated);
  m.z1 = m.z0;
  EXPECT_EQ(hj_lt(m, 0.125, 0.5, kExact).verdict, Verdict::holds);
}

TEST(HJLtProperty, LhsMonotoneInThresholds) {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = helpers::random_model("affine", rng);
    double prev = INFINITY;
    for (double t = 0.05; t < 2.0; t += 0.1) {
      const double lhs = hj_lt(m, t, 0.2, kExact).lhs.value;
      EXPECT_LE(lhs, prev);
      prev = lhs;
    }
    prev = INFINITY;
    for (double s = 0.05; s < 2.0; s += 0.1) {
      const double lhs = hj_lt(m, 0.3, s, kExact).lhs.value;
      EXPECT_LE(lhs, prev);
      prev = lhs;
    }
  }
}

TEST(HJHm, BernoulliPair) {
  const auto r = hj_hm(bernoulli_pair(), 2, 0.3, 0.3, kExact);
  EXPECT_EQ(r.lhs.value, 0.25);
  EXPECT_EQ(r.rhs.value, 5.25);
  EXPECT_EQ(r.verdict, Verdict::holds);
}

TEST(HJHm, EmptyLowerEventGivesInfinity) {
  const auto m = model("euclidean1", "1:0.5,2:0.5", 2);
  const auto r = hj_hm(m, 1, 0.0, 0.0, kExact);
  EXPECT_TRUE(std::isinf(r.rhs.value));
  EXPECT_EQ(r.verdict, Verdict::holds);
}

// hj_general at k = 1, n_1 = K bounds a larger event by a smaller right
// side than hj_hm, so it implies hj_hm; the identity of values is only
// asserted by the acceptance criterion.
TEST(HJHm, GeneralFormImpliesIt) {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = helpers::random_model("euclidean2", rng);
    for (std::size_t K = 1; K <= m.length() + 1 && K <= 3; ++K) {
      const auto r = hj_hm(m, K, 0.4, 0.3, kExact);
      const auto& c = r.details.at("hj_general_k1");
      ASSERT_TRUE(c.is_object());
      EXPECT_TRUE(c.at("lhs_dominates").get<bool>());
      EXPECT_TRUE(c.at("rhs_dominated").get<bool>());
    }
  }
}

TEST(JS, BernoulliPair) {
  const auto r = js_bound(bernoulli_pair(), 2, 0.3, kExact);
  EXPECT_EQ(r.lhs.value, 0.75);
  EXPECT_EQ(r.rhs.value, 21.0 / 16.0);
  const auto one = js_bound(bernoulli_pair(), 1, 0.3, kExact);
  EXPECT_EQ(one.verdict, Verdict::holds);
  EXPECT_GE(one.rhs.value, 0.75 + 0.75);
}

TEST(JS, ThreeStepsOnZeroTwo) {
  const auto m = model("euclidean1", "0:0.5,2:0.5", 3);
  const auto r = js_bound(m, 2, 1.0, kExact);
  const auto P = helpers::oracle_paths(m);
  const double gt = p_of(P, [](const Path& p) { return p.U > 1.0; });
  EXPECT_EQ(r.lhs.value, p_of(P, [](const Path& p) { return p.U > 3.0; }));
  EXPECT_EQ(r.rhs.value, p_of(P, [](const Path& p) { return p.M > 1.0; }) + gt * gt);
  EXPECT_EQ(r.verdict, Verdict::holds);
}

TEST(JS, RequiresNonnegativeRealLine) {
  EXPECT_THROW(js_bound(model("euclidean1", "-1:0.5,1:0.5", 2), 2, 0.3, kExact), InvalidArgument);
  EXPECT_THROW(js_bound(model("affine", "(2,0):1", 2), 2, 0.3, kExact), InvalidArgument);
}

TEST(KN, NonnegativePair) {
  const auto out = kn_bounds(bernoulli_pair(), 1, kExact);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].inequality, "kn-nonnegative");
  EXPECT_EQ(out[0].lhs.value, 0.75);
  EXPECT_EQ(out[0].rhs.value, 1.0);
  EXPECT_EQ(out[0].verdict, Verdict::holds);
}

TEST(KN, SymmetricSignsHaveLambdaOne) {
  EXPECT_THROW(kn_bounds(model("euclidean1", "-1:0.5,1:0.5", 2), 1, kExact), LambdaNotLessThanOne);
}

TEST(KN, DegenerateLambdaZero) {
  const auto out = kn_bounds(model("euclidean1", "-0.4:0.5,0.4:0.5", 2), 1, kExact);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].inequality, "kn-symmetric");
  EXPECT_EQ(out[0].rhs.value, 0.0);
  EXPECT_EQ(out[0].lhs.value, 0.0);
  EXPECT_EQ(out[0].slack, 0.0);
  EXPECT_EQ(out[0].verdict, Verdict::holds);
}

TEST(KN, RejectsAsymmetricSignedLaw) {
  EXPECT_THROW(kn_bounds(model("euclidean1", "-1:0.25,1:0.75", 2), 1, kExact), InvalidArgument);
}

TEST(KNScalar, Examples) {
  const auto a = kn_scalar_lemma(0.5, 3, 2);
  EXPECT_NEAR(a.lhs1, std::pow(3.0 * (1.0 - std::cbrt(0.5)), 2) / 2.0, 1e-15);
  EXPECT_NEAR(a.lhs1, 0.1915, 1e-4);
  EXPECT_EQ(a.rhs1, 0.5);
  EXPECT_TRUE(a.first_holds);
  const auto z = kn_scalar_lemma(0.0, 4, 3);
  EXPECT_EQ(z.lhs1, 0.0);
  EXPECT_EQ(z.rhs1, 0.0);
  EXPECT_TRUE(z.first_holds);
  const auto d = kn_scalar_lemma(0.01, 2, 2);
  EXPECT_NEAR(d.doubled, std::sqrt(2.0) * 2.0 * 0.99 * (1.0 - std::sqrt(0.99)), 1e-15);
  EXPECT_NEAR(d.doubled, 0.01404, 1e-5);
  EXPECT_TRUE(d.doubled_variant_exceeds);
  EXPECT_THROW(kn_scalar_lemma(1.0, 2, 2), InvalidArgument);
}

TEST(KNScalar, RootTermAccuracy) {
  for (std::size_t n = 1; n <= 50; ++n) {
    for (double l : {1e-12, 1e-6, 0.01, 0.3, 0.9, 0.999}) {
      const long double direct =
          static_cast<long double>(n) * (1.0L - std::pow(1.0L - static_cast<long double>(l), 1.0L / n));
      EXPECT_NEAR(kn_root_term(l, n), static_cast<double>(direct), 1e-15 * static_cast<double>(n) + 1e-12 * l);
    }
    EXPECT_EQ(kn_root_term(0.25, 1), 0.25);
  }
}

TEST(Ottaviani, BernoulliPair) {
  const auto r = ottaviani_skorohod(bernoulli_pair(), 0.5, 0.5, kExact);
  EXPECT_EQ(r.lhs.value, 0.375);
  EXPECT_EQ(r.rhs.value, 0.75);
  EXPECT_EQ(ottaviani_skorohod(bernoulli_pair(), 5, 5, kExact).lhs.value, 0.0);
}

TEST(Mogulskii, BernoulliPair) {
  const auto r = mogulskii(bernoulli_pair(), 1, 0.0, 1.0, MogulskiiVariant::min, kExact);
  EXPECT_EQ(r.lhs.value, 0.5);
  EXPECT_EQ(r.rhs.value, 0.75);
  const auto mx = mogulskii(bernoulli_pair(), 1, 0.5, 1.0, MogulskiiVariant::max, kExact);
  EXPECT_EQ(mx.rhs.value, 1.0);
  EXPECT_EQ(mx.verdict, Verdict::holds);
  EXPECT_EQ(parse_mogulskii_variant("max"), MogulskiiVariant::max);
  EXPECT_THROW(parse_mogulskii_variant("mid"), UnknownName);
}

TEST(Mogulskii, HeisenbergThreeSteps) {
  const auto m = model("heisenberg", "(1,0,0):0.5,(0,1,0):0.5", 3);
  const auto P = helpers::oracle_paths(m);
  expect_sides(mogulskii(m, 2, 1.2, 0.7, MogulskiiVariant::max, kExact),
               oracle_mogulskii(P, 2, 1.2, 0.7, true), "max");
  expect_sides(mogulskii(m, 1, 1.2, 0.7, MogulskiiVariant::min, kExact),
               oracle_mogulskii(P, 1, 1.2, 0.7, false), "min");
}

TEST(LevyOttaviani, BernoulliPair) {
  const auto r = levy_ottaviani(bernoulli_pair(), {0.5, 0.5}, kExact);
  EXPECT_EQ(r.lhs.value, 0.25);
  EXPECT_EQ(r.rhs.value, 1.25);
  EXPECT_EQ(levy_ottaviani(bernoulli_pair(), {2, 2, 2}, kExact).lhs.value, 0.0);
  EXPECT_THROW(levy_ottaviani(bernoulli_pair(), {0.5}, kExact), InvalidArgument);
}

TEST(Moment, BernoulliPair) {
  const auto r = moment_bound(bernoulli_pair(), 1.0, kExact);
  EXPECT_EQ(r.lhs.value, 1.0);
  EXPECT_EQ(r.rhs.value, 22.0);
  EXPECT_EQ(real_from_json(r.details.at("U_star")), 2.0);
  EXPECT_THROW(moment_bound(bernoulli_pair(), 1.0, MonteCarloEngine{1, 1000}), InvalidArgument);
}

TEST(Moment, IdentityStepsAndAffine) {
  const auto e = model("affine", "(1,0):1", 3);
  const auto r = moment_bound(e, 2.0, kExact);
  EXPECT_EQ(r.lhs.value, 0.0);
  EXPECT_EQ(r.verdict, Verdict::holds);
  const auto m = model("affine", "(2,0):0.5,(0.5,1):0.5", 3);
  expect_sides(moment_bound(m, 2.0, kExact), oracle_moment(helpers::oracle_paths(m), 2.0), "affine");
}

TEST(RearrangementRatio, BernoulliPair) {
  const auto r = rearrangement_ratio(bernoulli_pair(), 0.2, 0.5, kExact);
  EXPECT_EQ(r.u_t, 2.0);
  EXPECT_EQ(r.u_s, 1.0);
  EXPECT_EQ(r.m_half_t, 1.0);
  const double factor = std::log(1 / 0.2) / std::max(std::log(1 / 0.5), std::log(std::log(4 / 0.2)));
  EXPECT_NEAR(r.log_factor, factor, 1e-15);
  EXPECT_NEAR(r.minimal_c1, 2.0 / (factor * 2.0), 1e-15);
  const auto same = rearrangement_ratio(bernoulli_pair(), 0.3, 0.3, kExact);
  EXPECT_TRUE(std::isfinite(same.minimal_c1));
  const auto zero = rearrangement_ratio(bernoulli_pair(), 0.3, 0.5, kExact);
  EXPECT_EQ(to_json(zero).at("verdict"), "report-only");
  const auto flat = rearrangement_ratio(model("euclidean1", "0:1", 2), 0.2, 0.4, kExact);
  EXPECT_EQ(flat.u_t, 0.0);
  EXPECT_EQ(flat.minimal_c1, 0.0);
  EXPECT_THROW(rearrangement_ratio(bernoulli_pair(), 0.4, 0.3, kExact), InvalidArgument);
}

// Every checker against the brute-force oracle on random models.
TEST(CheckerProperty, MatchOracleOnRandomModels) {
  for (const char* name : {"euclidean1", "euclidean2", "affine", "heisenberg", "cyclic5"}) {
    Rng rng(derive_seed(101, std::hash<std::string>{}(name) % 1000));
    int compared = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = helpers::random_model(name, rng);
      const auto P = helpers::oracle_paths(m);
      double top = 0.0;
      for (const auto& p : P) top = std::max(top, p.U);
      if (top == 0.0) top = 1.0;
      const double t = (0.05 + uniform01(rng)) * top / 2.0;
      const double s = (0.05 + uniform01(rng)) * top / 2.0;
      const double t2 = (0.05 + uniform01(rng)) * top / 3.0;
      const std::size_t n = m.length();
      const std::size_t K = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(std::min<std::size_t>(n + 1, 3))));
      const std::vector<double> a{t, t2, s};
      std::vector<double> levels{t, s, t2, 3 * t + s, t + t2, t + t2 + s};
      const double Kd = static_cast<double>(K);
      levels.push_back(2 * Kd * t + (Kd - 1) * s);
      levels.push_back((2 * Kd - 1) * t + (Kd - 1) * s);
      levels.push_back(t - s);
      levels.push_back(t + s);
      levels.push_back((Kd - 1) * s);
      if (near_edge(P, levels)) continue;
      ++compared;
      expect_sides(hj_lt(m, t, s, kExact), oracle_hj_lt(P, t, s), std::string(name) + " hj-lt");
      expect_sides(hj_general(m, HJParams{{K}, {t}, s, false}, kExact),
                   oracle_hj_general(P, {K}, {t}, s, false), std::string(name) + " hj-general");
      expect_sides(hj_general(m, HJParams{{1, K - (K > 1 ? 1 : 0)}, {t, t2}, s, true}, kExact),
                   oracle_hj_general(P, {1, K - (K > 1 ? 1 : 0)}, {t, t2}, s, true),
                   std::string(name) + " hj-general strengthened");
      expect_sides(hj_hm(m, K, t, s, kExact), oracle_hj_hm(P, K, t, s), std::string(name) + " hj-hm");
      expect_sides(ottaviani_skorohod(m, t, s, kExact), oracle_os(P, t, s), std::string(name) + " os");
      const std::size_t mm = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(n)));
      expect_sides(mogulskii(m, mm, t, s, MogulskiiVariant::max, kExact), oracle_mogulskii(P, mm, t, s, true),
                   std::string(name) + " mogulskii-max");
      expect_sides(mogulskii(m, mm, t, s, MogulskiiVariant::min, kExact), oracle_mogulskii(P, mm, t, s, false),
                   std::string(name) + " mogulskii-min");
      expect_sides(levy_ottaviani(m, a, kExact), oracle_levy_ottaviani(P, a), std::string(name) + " lo3");
      expect_sides(levy_ottaviani(m, {t, t2}, kExact), oracle_levy_ottaviani(P, {t, t2}), std::string(name) + " lo2");
      for (double p : {0.5, 1.0, 2.0}) {
        expect_sides(moment_bound(m, p, kExact), oracle_moment(P, p), std::string(name) + " moment");
      }
    }
    EXPECT_GE(compared, 30) << name;
  }
}

TEST(Report, JsonFieldOrderAndInfinity) {
  const auto r = hj_lt(bernoulli_pair(), 0.3, 0.3, kExact);
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"inequality", "instance", "params", "engine", "lhs", "rhs",
                                            "slack", "verdict", "runtime_ms", "details"}));
  EXPECT_EQ(json_real(INFINITY), "+inf");
  EXPECT_EQ(real_from_json(Json("+inf")), INFINITY);
  EXPECT_EQ(real_from_json(Json(0.5)), 0.5);
}

TEST(Report, ExactRunsAreByteIdentical) {
  const auto m = model("heisenberg", "(1,0,0):0.5,(0,1,0):0.25,(0,0,1):0.25", 4);
  auto a = to_json(hj_hm(m, 2, 0.4, 0.3, kExact, 1));
  auto b = to_json(hj_hm(m, 2, 0.4, 0.3, kExact, 4));
  a.erase("runtime_ms");
  b.erase("runtime_ms");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Report, EchoedParamsReRun) {
  const auto m = model("affine", "(2,0):0.5,(0.5,1):0.5", 3);
  const std::vector<InequalityReport> originals{
      hj_general(m, HJParams{{1, 2}, {0.3, 0.2}, 0.1, true}, kExact),
      mogulskii(m, 2, 0.6, 0.2, MogulskiiVariant::min, kExact),
      levy_ottaviani(m, {0.2, 0.3, 0.4}, kExact),
      moment_bound(m, 0.5, kExact),
      ottaviani_skorohod(m, 0.5, 0.25, kExact),
      hj_hm(m, 2, 0.3, 0.2, kExact)};
  for (const auto& r : originals) {
    const auto text = to_json(r).dump();
    const auto parsed = Json::parse(text);
    const auto inst = find_instance(parsed.at("instance").get<std::string>());
    const auto again_model = model_from_json(inst, parsed.at("params"));
    auto name = parsed.at("inequality").get<std::string>();
    const auto again = run_inequality(name, again_model, parsed.at("params"),
                                      engine_from_json(parsed.at("engine")));
    ASSERT_EQ(again.size(), 1u);
    EXPECT_EQ(again[0].lhs.value, r.lhs.value) << name;
    EXPECT_EQ(again[0].rhs.value, r.rhs.value) << name;
  }
}

TEST(Report, CsvRow) {
  const auto r = hj_lt(bernoulli_pair(), 0.3, 0.3, kExact);
  EXPECT_EQ(csv_header(), "inequality,instance,lhs,rhs,slack,verdict,engine,seed");
  EXPECT_EQ(to_csv_row(r), "hj-lt,euclidean1,0.25,1.3125,1.0625,holds,exact,");
  const auto mc = hj_lt(bernoulli_pair(), 0.3, 0.3, MonteCarloEngine{42, 1000});
  EXPECT_NE(to_csv_row(mc).find(",mc,42"), std::string::npos);
}

TEST(Verdict, MonteCarloIsThreeValued) {
  EXPECT_EQ(decide(Estimate{0.1, 0.05, 0.15}, Estimate{0.5, 0.4, 0.6}, false), Verdict::holds);
  EXPECT_EQ(decide(Estimate{0.7, 0.65, 0.75}, Estimate{0.5, 0.4, 0.6}, false), Verdict::violated);
  EXPECT_EQ(decide(Estimate{0.5, 0.45, 0.55}, Estimate{0.5, 0.4, 0.6}, false), Verdict::indeterminate);
  EXPECT_EQ(decide(Estimate::exact(0.5), Estimate::exact(0.5), true), Verdict::holds);
  EXPECT_EQ(decide(Estimate::exact(0.6), Estimate::exact(0.5), true), Verdict::violated);
}

TEST(Registry, NamesAndErrors) {
  const auto& names = inequality_names();
  EXPECT_EQ(names.size(), 9u);
  EXPECT_THROW(run_inequality("no-such", bernoulli_pair(), Json::object(), kExact), UnknownName);
  EXPECT_THROW(run_inequality("hj-lt", bernoulli_pair(), Json{{"t", 0.3}}, kExact), InvalidArgument);
}

TEST(Battery, WorkerCountIndependent) {
  BatteryOptions o;
  o.configs = 4;
  o.workers = 1;
  const auto a = run_battery(o);
  o.workers = 4;
  const auto b = run_battery(o);
  auto ja = battery_to_json(a.reports());
  auto jb = battery_to_json(b.reports());
  for (auto* j : {&ja, &jb}) {
    for (auto& r : j->at("reports")) r.erase("runtime_ms");
  }
  EXPECT_EQ(ja.dump(), jb.dump());
  EXPECT_EQ(a.errors(), 0u);
  EXPECT_EQ(a.summary().violated, 0u);
}

TEST(Battery, DrawsStayWithinLimits) {
  for (const auto& checker : battery_checkers()) {
    for (const auto& name : battery_instances()) {
      const auto inst = find_instance(name);
      if (!checker_applies(checker, *inst)) continue;
      Rng rng(17);
      for (int i = 0; i < 10; ++i) {
        const auto trial = draw_trial(checker, inst, rng);
        ASSERT_TRUE(trial) << checker << "@" << name;
        EXPECT_LE(trial->model.length(), 6u);
        EXPECT_LE(outcome_count(trial->model), 729u);
        for (const auto& v : trial->model.variables) EXPECT_LE(v.size(), 3u);
      }
    }
  }
}

TEST(Stress, AffineAndRealLineClean) {
  EXPECT_TRUE(stress_search(find_instance("affine"), "hj-lt", 3, 200, 0).empty());
  for (const auto& checker : battery_checkers()) {
    EXPECT_TRUE(stress_search(find_instance("euclidean1"), checker, 4, 200, 0).empty()) << checker;
  }
}

TEST(Stress, CounterexampleRunsCleanly) {
  const auto found = stress_search(find_instance("counterexample"), "hj-lt", 5, 100, 0);
  for (const auto& r : found) {
    EXPECT_EQ(r.verdict, Verdict::violated);
    EXPECT_FALSE(to_json(r).dump().empty());
  }
}
