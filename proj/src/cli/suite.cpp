#include "semilab/cli/suite.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "semilab/algebra/catalog.hpp"
#include "semilab/algebra/embedding.hpp"
#include "semilab/algebra/instances.hpp"
#include "semilab/algebra/invariance.hpp"
#include "semilab/inequalities/battery.hpp"
#include "semilab/inequalities/classical.hpp"
#include "semilab/inequalities/hoffmann_jorgensen.hpp"
#include "semilab/inequalities/moments.hpp"
#include "semilab/probability/lemmas.hpp"
#include "semilab/probability/levy.hpp"
#include "semilab/probability/rearrangement.hpp"

namespace semilab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(double v) { return format_real(v); }

CriterionResult result_for(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

PathModel iid_model(const InstancePtr& instance, const FiniteDistribution& law, std::size_t n) {
  const auto e = instance->identity();
  return PathModel{std::vector<FiniteDistribution>(n, law), *e, *e, Orientation::left};
}

FiniteDistribution uniform_real(const InstancePtr& line, std::vector<double> points) {
  std::vector<Element> support;
  for (double x : points) support.push_back(RealVector{x});
  return FiniteDistribution::uniform(line, std::move(support));
}

// 1. Every checker on every battery instance holds with slack >= 0.
CriterionResult battery_criterion(const SuiteOptions& options) {
  CriterionResult r = result_for(1, "inequality battery (exact)");
  const auto start = Clock::now();
  BatteryOptions b;
  b.seed = options.seed;
  b.configs = 50;
  b.workers = options.workers;
  const auto result = run_battery(b);
  const double elapsed = ms_since(start);
  const auto reports = result.reports();
  const auto summary = summarize(reports);
  std::size_t negative_slack = 0;
  for (const auto& rep : reports) negative_slack += rep.slack >= 0.0 ? 0 : 1;
  std::map<std::string, std::size_t> per_cell;
  for (const auto& e : result.entries) {
    if (!e.error && !e.reports.empty()) ++per_cell[e.checker + "@" + e.instance];
  }
  std::size_t thin_cells = 0;
  for (const auto& [cell, count] : per_cell) thin_cells += count >= 50 ? 0 : 1;

  r.passed = result.errors() == 0 && summary.violated == 0 && summary.indeterminate == 0 &&
             negative_slack == 0 && thin_cells == 0 && summary.total > 0;
  std::ostringstream d;
  d << summary.holds << "/" << summary.total << " hold over " << per_cell.size()
    << " cells, " << result.errors() << " errors, " << negative_slack << " negative slack, "
    << elapsed / 1000.0 << " s";
  r.detail = d.str();
  r.data = battery_to_json(reports);
  r.data["runtime_ms"] = elapsed;
  return r;
}

// 2. hj_general at the two quoted parameter choices against hj_lt / hj_hm.
CriterionResult specialization_criterion(const SuiteOptions& options) {
  CriterionResult r = result_for(2, "specialization identities");
  BatteryOptions b;
  b.seed = options.seed;
  b.configs = 50;
  b.workers = options.workers;
  b.checkers = {"hj-lt", "hj-hm"};
  const auto result = run_battery(b);

  std::size_t lt_total = 0, lt_agree = 0, hm_total = 0, hm_agree = 0, hm_dominated = 0,
              hm_skipped = 0;
  double lt_max = 0.0, hm_max = 0.0;
  for (const auto& e : result.entries) {
    for (const auto& rep : e.reports) {
      if (rep.inequality == "hj-lt") {
        const auto& c = rep.details.at("hj_general_k2");
        ++lt_total;
        lt_agree += c.at("agree").get<bool>() ? 1 : 0;
        lt_max = std::max({lt_max, real_from_json(c.at("lhs_diff")), real_from_json(c.at("rhs_diff"))});
      } else {
        const auto& c = rep.details.at("hj_general_k1");
        if (!c.is_object()) {
          ++hm_skipped;
          continue;
        }
        ++hm_total;
        hm_agree += c.at("agree").get<bool>() ? 1 : 0;
        hm_dominated +=
            (c.at("lhs_dominates").get<bool>() && c.at("rhs_dominated").get<bool>()) ? 1 : 0;
        hm_max = std::max({hm_max, real_from_json(c.at("lhs_diff")), real_from_json(c.at("rhs_diff"))});
      }
    }
  }
  r.passed = result.errors() == 0 && lt_total > 0 && hm_total > 0 && lt_agree == lt_total &&
             hm_agree == hm_total;
  std::ostringstream d;
  d << "hj-lt " << lt_agree << "/" << lt_total << " agree (max diff " << fmt(lt_max)
    << "); hj-hm " << hm_agree << "/" << hm_total << " agree (max diff " << fmt(hm_max)
    << ", " << hm_skipped << " with K > n+1 skipped), hj_general bound implies hj_hm in "
    << hm_dominated << "/" << hm_total;
  r.detail = d.str();
  r.data["hj_lt"] = {{"total", lt_total}, {"agree", lt_agree}, {"max_diff", json_real(lt_max)}};
  r.data["hj_hm"] = {{"total", hm_total},
                     {"agree", hm_agree},
                     {"max_diff", json_real(hm_max)},
                     {"dominated", hm_dominated},
                     {"skipped", hm_skipped}};
  return r;
}

bool witness_differs(const InvarianceReport& rep) {
  return rep.witness && std::abs(rep.witness->first - rep.witness->second) > rep.tolerance;
}

// 3. Invariance classes of the built-in instances.
CriterionResult invariance_criterion(const SuiteOptions& options) {
  CriterionResult r = result_for(3, "invariance classification");
  const Sampled sampled{10'000, options.seed};
  std::vector<std::string> failures;
  const auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  for (const char* name : {"euclidean1", "euclidean2"}) {
    const auto rep = check_invariance(*find_instance(name), InvarianceKind::bi, sampled);
    expect(rep.holds && rep.checked >= 10'000 && !rep.witness, std::string(name) + " bi");
  }
  for (const char* name : {"affine", "heisenberg"}) {
    const auto inst = find_instance(name);
    expect(check_invariance(*inst, InvarianceKind::left, sampled).holds, std::string(name) + " left");
    expect(check_invariance(*inst, InvarianceKind::strong_left, sampled).holds,
           std::string(name) + " strong-left");
    const auto right = check_invariance(*inst, InvarianceKind::right, sampled);
    expect(!right.holds && witness_differs(right), std::string(name) + " right witness");
  }
  const auto cex = find_instance("counterexample");
  const Exhaustive slice{8};
  expect(check_invariance(*cex, InvarianceKind::left, slice).holds, "counterexample left");
  const auto strong = check_invariance(*cex, InvarianceKind::strong_left, slice);
  bool expected_witness = false;
  if (strong.witness && strong.witness->elements.size() == 2) {
    const auto& w = *strong.witness;
    expected_witness = cex->equal(w.elements[0], CounterexampleSemigroup::g()) &&
                    cex->equal(w.elements[1], CounterexampleSemigroup::h()) && w.first == 2.0 &&
                    w.second == 1.0;
  }
  expect(!strong.holds && expected_witness, "counterexample strong-left witness (g, h; 2 vs 1)");
  r.passed = failures.empty();
  if (r.passed) {
    r.detail = "euclidean bi, affine/heisenberg left+strong-left with right witnesses, "
               "counterexample d(g, gh) = 2 vs d(h, h^2) = 1";
  } else {
    for (const auto& f : failures) r.detail += (r.detail.empty() ? "failed: " : ", ") + f;
  }
  return r;
}

// 4. Adjoining an identity.
CriterionResult embedding_criterion(const SuiteOptions& options) {
  CriterionResult r = result_for(4, "identity-adjoining embedding");
  const Sampled sampled{10'000, options.seed};
  std::vector<std::string> failures;
  const auto monoid = adjoin_identity(make_positive_reals(), sampled);
  const auto axioms = check_metric_axioms(*monoid, sampled, 1e-9);
  const auto left = check_invariance(*monoid, InvarianceKind::left, sampled, 1e-9);
  if (!axioms.holds || axioms.max_discrepancy > 1e-9) failures.push_back("metric axioms");
  if (!left.holds || left.max_discrepancy > 1e-9) failures.push_back("left invariance");
  const auto e = *monoid->identity();
  Rng rng(derive_seed(options.seed, 4));
  std::size_t exact = 0;
  for (int i = 0; i < 10'000; ++i) {
    const auto x = make_positive_reals()->sample(rng);
    exact += monoid->distance(e, x) == std::get<RealVector>(x)[0] ? 1 : 0;
  }
  if (exact != 10'000) failures.push_back("d(e, x) = x on " + std::to_string(exact) + "/10000");
  bool refused = false;
  try {
    adjoin_identity(make_counterexample(), sampled);
  } catch (const IdempotentPresent& ip) {
    refused = !ip.is_identity() && make_counterexample()->equal(ip.witness(), CounterexampleSemigroup::g());
  }
  if (!refused) failures.push_back("counterexample not refused with IdempotentPresent(g)");
  r.passed = failures.empty();
  std::ostringstream d;
  if (r.passed) {
    d << "positive-reals+e: axioms max discrepancy " << fmt(axioms.max_discrepancy)
      << ", left max discrepancy " << fmt(left.max_discrepancy)
      << ", d(e, x) = x on 10000 samples; counterexample refused with idempotent g";
  } else {
    d << "failed:";
    for (const auto& f : failures) d << " " << f << ";";
  }
  r.detail = d.str();
  return r;
}

// 5. The tail-moment identity, the pigeonhole power bound and the scalar
// Klass-Nowicki comparison.
CriterionResult lemmas_criterion(const SuiteOptions& options) {
  CriterionResult r = result_for(5, "analytic lemmas");
  Rng rng(derive_seed(options.seed, 5));
  double worst_tail = 0.0;
  for (int law_index = 0; law_index < 100; ++law_index) {
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 8));
    std::vector<std::pair<double, double>> atoms;
    std::vector<double> raw;
    for (std::size_t i = 0; i < m; ++i) raw.push_back(0.05 + uniform01(rng));
    auto copy = raw;
    const double total = sorted_sum(copy);
    for (std::size_t i = 0; i < m; ++i) atoms.emplace_back(3.0 * uniform01(rng), raw[i] / total);
    const auto law = DiscreteLaw::from_atoms(atoms);
    for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
      worst_tail = std::max(worst_tail, std::abs(tail_moment_identity(law, alpha).diff));
    }
  }
  std::size_t pigeon_fail = 0;
  for (int i = 0; i < 10'000; ++i) {
    const auto k = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    std::vector<double> w(k), a(k);
    std::vector<double> combo;
    for (std::size_t j = 0; j < k; ++j) {
      w[j] = 2.0 * uniform01(rng);
      a[j] = 2.0 * uniform01(rng);
      combo.push_back(w[j] * a[j]);
    }
    const double bound = sorted_sum(combo);
    const double p = 0.05 + 4.0 * uniform01(rng);
    pigeon_fail += pigeonhole_power_check(uniform01(rng) * bound, w, a, p).holds ? 0 : 1;
  }
  std::size_t grid_fail = 0;
  for (int step = 1; step <= 99; ++step) {
    for (std::size_t n = 1; n <= 20; ++n) {
      for (std::size_t k = 1; k <= 6; ++k) {
        grid_fail += kn_scalar_lemma(step / 100.0, n, k).first_holds ? 0 : 1;
      }
    }
  }
  const auto witness = kn_scalar_lemma(0.01, 2, 2);
  const double direct = std::sqrt(2.0) * 2.0 * 0.99 * (1.0 - std::sqrt(0.99));
  const bool witnessed = witness.doubled_variant_exceeds &&
                         std::abs(witness.doubled - direct) <= 1e-6 && witness.doubled > 0.01;
  r.passed = worst_tail <= 1e-12 && pigeon_fail == 0 && grid_fail == 0 && witnessed;
  std::ostringstream d;
  d << "tail-moment max |diff| " << fmt(worst_tail) << " over 400 cases; pigeonhole "
    << 10'000 - pigeon_fail << "/10000; scalar grid " << 99 * 20 * 6 - grid_fail << "/"
    << 99 * 20 * 6 << "; doubled variant " << fmt(witness.doubled) << " > 0.01";
  r.detail = d.str();
  return r;
}

struct AgreementCase {
  InstancePtr instance;
  FiniteDistribution law;
  std::size_t n;
};

// Threshold between two atoms of `law` where the tail is closest to 1/2.
double middle_threshold(const DiscreteLaw& law) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < law.size(); ++i) {
    if (std::abs(law.tail_after(i) - 0.5) < std::abs(law.tail_after(best) - 0.5)) best = i;
  }
  if (best + 1 < law.size()) return (law.values()[best] + law.values()[best + 1]) / 2.0;
  return law.values()[best];
}

// 6. Monte Carlo intervals against exact values.
CriterionResult agreement_criterion(const SuiteOptions& options) {
  CriterionResult r = result_for(6, "engine agreement");
  const auto line = find_instance("euclidean1");
  const auto plane = find_instance("euclidean2");
  const auto affine = find_instance("affine");
  const auto heis = find_instance("heisenberg");
  const auto cyc = find_instance("cyclic5");
  const std::vector<AgreementCase> cases{
      {line, uniform_real(line, {0.0, 1.0}), 2},
      {affine, FiniteDistribution::uniform(affine, {AffineMap{2, 0}, AffineMap{0.5, 1}}), 3},
      {heis,
       FiniteDistribution::uniform(heis, {HeisenbergPoint{1, 0, 0}, HeisenbergPoint{0, 1, 0}}), 3},
      {cyc, FiniteDistribution(cyc, {CyclicIndex{1}, CyclicIndex{2}, CyclicIndex{4}}, {0.25, 0.25, 0.5}), 3},
      {plane,
       FiniteDistribution(plane, {RealVector{1, 0}, RealVector{0, 1}, RealVector{-1, -1}},
                          {0.5, 0.25, 0.25}),
       4}};
  std::size_t pairs = 0, covered = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto model = iid_model(cases[c].instance, cases[c].law, cases[c].n);
    const std::vector<PathFunctional> f{[](const PathStatistics& x) { return x.U(); },
                                        [](const PathStatistics& x) { return x.M(); }};
    const auto laws = exact_laws(model, f);
    const double tu = middle_threshold(laws[0]);
    const double tm = middle_threshold(laws[1]);
    const std::vector<PathEvent> events{[tu](const PathStatistics& x) { return x.U() > tu; },
                                        [tm](const PathStatistics& x) { return x.M() > tm; }};
    const auto exact = event_probabilities(model, events, ExactEngine{}, options.workers);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const MonteCarloEngine mc{derive_seed(options.seed, 600 + c * 10 + s), 100'000};
      const auto est = event_probabilities(model, events, mc, options.workers);
      for (std::size_t e = 0; e < events.size(); ++e) {
        ++pairs;
        covered += est[e].contains(exact[e].value) ? 1 : 0;
      }
    }
  }
  r.passed = pairs == 100 && covered >= 95;
  r.detail = std::to_string(covered) + "/" + std::to_string(pairs) +
             " Hoeffding 99% intervals (N = 100000) contain the exact value";
  return r;
}

// 7. Rearrangement values and the moment bound on the Bernoulli pair.
CriterionResult rearrangement_criterion(const SuiteOptions&) {
  CriterionResult r = result_for(7, "rearrangement");
  const auto line = find_instance("euclidean1");
  const auto model = iid_model(line, uniform_real(line, {0.0, 1.0}), 2);
  const auto law = exact_law(model, [](const PathStatistics& x) { return x.U(); });
  const double a = decreasing_rearrangement(law, 0.5);
  const double b = decreasing_rearrangement(law, 0.2);
  const double c = decreasing_rearrangement(law, 0.8);
  const auto bound = moment_bound(model, 1.0, ExactEngine{});
  r.passed = a == 1.0 && b == 2.0 && c == 0.0 && bound.lhs.value == 1.0 && bound.rhs.value == 22.0;
  r.detail = "U*(0.5) = " + fmt(a) + ", U*(0.2) = " + fmt(b) + ", U*(0.8) = " + fmt(c) +
             "; moment bound p = 1: lhs = " + fmt(bound.lhs.value) + ", rhs = " + fmt(bound.rhs.value);
  return r;
}

// 8. Shape of the Levy tail table in a convergent and a divergent case.
CriterionResult levy_criterion(const SuiteOptions& options) {
  CriterionResult r = result_for(8, "Levy diagnostic");
  const auto line = find_instance("euclidean1");
  const std::size_t N = 20;
  const Element zero = RealVector{0.0};
  const MonteCarloEngine mc{derive_seed(options.seed, 8), 10'000};
  const auto summable = levy_diagnostic(
      [&](std::size_t n) {
        const double step = std::ldexp(1.0, -static_cast<int>(n));
        return uniform_real(line, {-step, step});
      },
      N, {0.01}, zero, zero, mc, Orientation::left, options.workers);
  const auto walk = levy_diagnostic([&](std::size_t) { return uniform_real(line, {-1.0, 1.0}); },
                                    N, {0.5}, zero, zero, mc, Orientation::left, options.workers);
  double worst_summable = 0.0;
  for (std::size_t n = 10; n <= N; ++n) {
    worst_summable = std::max(worst_summable, summable.at(n, 0).to_end.value);
  }
  double least_walk = 1.0;
  for (std::size_t n = 1; n < N; ++n) least_walk = std::min(least_walk, walk.at(n, 0).to_end.value);
  r.passed = worst_summable <= 0.01 && least_walk >= 0.4;
  r.detail = "summable steps: max_{n>=10} P(d(S_n,S_N) > 0.01) = " + fmt(worst_summable) +
             "; +-1 walk: min_{n<N} P(d(S_n,S_N) > 0.5) = " + fmt(least_walk);
  return r;
}

// 9. No violation found by random search on strongly left-invariant
// instances.
CriterionResult stress_criterion(const SuiteOptions& options) {
  CriterionResult r = result_for(9, "stress search");
  std::size_t violations = 0, runs = 0;
  Json found = Json::array();
  for (const auto& checker : battery_checkers()) {
    for (const auto& name : battery_instances()) {
      const auto inst = find_instance(name);
      if (!checker_applies(checker, *inst)) continue;
      ++runs;
      const auto v = stress_search(inst, checker, derive_seed(options.seed, 9), 200, options.workers);
      violations += v.size();
      for (const auto& rep : v) found.push_back(to_json(rep));
    }
  }
  r.passed = violations == 0;
  r.detail = std::to_string(violations) + " violations over " + std::to_string(runs) +
             " (checker, instance) searches of 200 trials";
  r.data["violations"] = found;
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  switch (id) {
    case 1: return battery_criterion(options);
    case 2: return specialization_criterion(options);
    case 3: return invariance_criterion(options);
    case 4: return embedding_criterion(options);
    case 5: return lemmas_criterion(options);
    case 6: return agreement_criterion(options);
    case 7: return rearrangement_criterion(options);
    case 8: return levy_criterion(options);
    case 9: return stress_criterion(options);
    default: throw InvalidArgument("no acceptance criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_acceptance(const SuiteOptions& options,
                                            const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  if (ids.empty()) {
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  } else {
    for (int id : ids) out.push_back(run_criterion(id, options));
  }
  return out;
}

std::string format_criterion(const CriterionResult& result) {
  return std::string(result.passed ? "[PASS] " : "[FAIL] ") + std::to_string(result.id) + " " +
         result.name + ": " + result.detail;
}

Json to_json(const CriterionResult& result) {
  Json out;
  out["id"] = result.id;
  out["name"] = result.name;
  out["passed"] = result.passed;
  out["detail"] = result.detail;
  if (!result.data.empty()) out["data"] = result.data;
  return out;
}

}  // namespace semilab
