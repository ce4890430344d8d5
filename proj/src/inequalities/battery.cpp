#include "semilab/inequalities/battery.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "semilab/algebra/catalog.hpp"
#include "semilab/error.hpp"
#include "semilab/inequalities/classical.hpp"
#include "semilab/inequalities/registry.hpp"

namespace semilab {

const std::vector<std::string>& battery_checkers() {
  static const std::vector<std::string> names{
      "hj-general",       "hj-general-strengthened", "hj-lt",
      "hj-hm",            "js",                      "kn",
      "ottaviani-skorohod", "mogulskii-min",         "mogulskii-max",
      "levy-ottaviani-2", "levy-ottaviani-3",        "levy-ottaviani-4",
      "moment-0.5",       "moment-1",                "moment-2"};
  return names;
}

const std::vector<std::string>& battery_instances() {
  static const std::vector<std::string> names{"euclidean1", "euclidean2", "affine", "heisenberg",
                                              "cyclic5"};
  return names;
}

bool checker_applies(std::string_view checker, const MetricSemigroup& instance) {
  if (checker == "js" || checker == "kn") return is_real_line(instance);
  return true;
}

namespace {

constexpr std::size_t kMaxLength = 6;
constexpr std::size_t kMaxSupport = 3;
constexpr std::int64_t kWeightDenominator = 16;

// m positive multiples of 1/16 summing to 1.
std::vector<double> dyadic_weights(std::size_t m, Rng& rng) {
  std::set<std::int64_t> cuts;
  while (cuts.size() + 1 < m) cuts.insert(uniform_int(rng, 1, kWeightDenominator - 1));
  std::vector<double> out;
  std::int64_t previous = 0;
  for (auto c : cuts) {
    out.push_back(static_cast<double>(c - previous) / kWeightDenominator);
    previous = c;
  }
  out.push_back(static_cast<double>(kWeightDenominator - previous) / kWeightDenominator);
  return out;
}

FiniteDistribution draw_law(const InstancePtr& instance, Rng& rng) {
  const auto m = static_cast<std::size_t>(uniform_int(rng, 1, kMaxSupport));
  std::vector<Element> support;
  std::set<std::string> seen;
  for (int attempt = 0; support.size() < m && attempt < 64; ++attempt) {
    auto x = instance->sample(rng, SampleStyle::lattice);
    if (seen.insert(instance->encode(x)).second) support.push_back(std::move(x));
  }
  return FiniteDistribution(instance, std::move(support), dyadic_weights(support.size(), rng));
}

double lattice_real(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return static_cast<double>(uniform_int(rng, lo, hi)) * 0.25;
}

// Nonnegative points on the quarter grid [0, 2].
FiniteDistribution draw_nonnegative_law(const InstancePtr& instance, Rng& rng) {
  const auto m = static_cast<std::size_t>(uniform_int(rng, 1, kMaxSupport));
  std::set<double> points;
  while (points.size() < m) points.insert(lattice_real(rng, 0, 8));
  std::vector<Element> support;
  for (double x : points) support.push_back(RealVector{x});
  return FiniteDistribution(instance, std::move(support), dyadic_weights(m, rng));
}

// {-a, a} or {-a, 0, a} with mirrored weights.
FiniteDistribution draw_symmetric_law(const InstancePtr& instance, Rng& rng) {
  const double a = lattice_real(rng, 1, 6);
  if (uniform_int(rng, 0, 1) == 0) {
    return FiniteDistribution(instance, {RealVector{-a}, RealVector{a}}, {0.5, 0.5});
  }
  const auto w = static_cast<double>(uniform_int(rng, 1, 7)) / kWeightDenominator;
  return FiniteDistribution(instance, {RealVector{-a}, RealVector{0.0}, RealVector{a}},
                            {w, 1.0 - 2.0 * w, w});
}

Element draw_base(const InstancePtr& instance, Rng& rng) {
  const auto e = instance->identity();
  if (e && uniform_int(rng, 0, 1) == 0) return *e;
  return instance->sample(rng, SampleStyle::lattice);
}

PathModel draw_model(std::string_view checker, const InstancePtr& instance, Rng& rng) {
  const auto n = static_cast<std::size_t>(uniform_int(rng, 1, kMaxLength));
  const bool iid = uniform_int(rng, 0, 1) == 0;
  const bool real_checker = checker == "js" || checker == "kn";
  const bool symmetric = checker == "kn" && uniform_int(rng, 0, 1) == 0;
  const auto law = [&] {
    if (checker == "js") return draw_nonnegative_law(instance, rng);
    if (checker == "kn") {
      return symmetric ? draw_symmetric_law(instance, rng) : draw_nonnegative_law(instance, rng);
    }
    return draw_law(instance, rng);
  };
  PathModel model;
  if (iid) {
    model.variables.assign(n, law());
  } else {
    for (std::size_t j = 0; j < n; ++j) model.variables.push_back(law());
  }
  if (real_checker) {
    model.z0 = RealVector{0.0};
    model.z1 = RealVector{0.0};
  } else if (checker.rfind("hj-", 0) == 0) {
    // The first-passage step at j = 1 needs d(z1, z0) <= t, so these
    // bounds can fail for n = 1 and distinct base points.
    model.z0 = draw_base(instance, rng);
    model.z1 = model.z0;
  } else {
    model.z0 = draw_base(instance, rng);
    model.z1 = draw_base(instance, rng);
  }
  return model;
}

struct Grid {
  std::vector<double> all;
  std::vector<double> positive;
  // Grid points divided by 1..4, for parameters that enter a threshold as
  // one term of a sum (so the sum can still land inside the range of U_n).
  std::vector<double> fine;
  std::vector<double> fine_positive;
};

// Atoms of U_n and M_n, midpoints of consecutive U_n atoms and halves of
// the U_n atoms: thresholds that land on and between the jumps.
Grid threshold_grid(const PathModel& model) {
  const std::vector<PathFunctional> f{[](const PathStatistics& x) { return x.U(); },
                                      [](const PathStatistics& x) { return x.M(); }};
  const auto laws = exact_laws(model, f, ExactEngine{}, 1);
  std::set<double> grid;
  const auto u = laws[0].values();
  for (std::size_t i = 0; i < u.size(); ++i) {
    grid.insert(u[i]);
    grid.insert(u[i] / 2.0);
    if (i + 1 < u.size()) grid.insert((u[i] + u[i + 1]) / 2.0);
  }
  for (double v : laws[1].values()) grid.insert(v);
  Grid out;
  for (double v : grid) {
    if (v >= 0.0) out.all.push_back(v);
    if (v > 0.0) out.positive.push_back(v);
  }
  if (out.positive.empty()) out.positive.push_back(0.5);
  if (out.all.empty()) out.all.push_back(0.0);
  std::set<double> fine;
  for (double v : out.all) {
    for (int d = 1; d <= 4; ++d) fine.insert(v / d);
  }
  out.fine.assign(fine.begin(), fine.end());
  for (double v : out.fine) {
    if (v > 0.0) out.fine_positive.push_back(v);
  }
  if (out.fine_positive.empty()) out.fine_positive.push_back(0.5);
  return out;
}

double pick(const std::vector<double>& values, Rng& rng) {
  return values[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(values.size()) - 1))];
}

std::size_t pick_count(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(lo),
                                              static_cast<std::int64_t>(hi)));
}

// Every value a checker compares against a threshold: d(z1, z0 S_k),
// d(S_k, S_n) and the sums of the largest increments.
std::vector<double> path_atoms(const PathModel& model) {
  const auto n = model.length();
  std::vector<PathFunctional> f;
  for (std::size_t k = 0; k < n; ++k) {
    f.push_back([k](const PathStatistics& x) { return x.radial[k]; });
    f.push_back([k](const PathStatistics& x) { return x.to_end[k]; });
    f.push_back([k](const PathStatistics& x) { return x.top_sum(k + 1); });
  }
  std::set<double> out;
  for (const auto& law : exact_laws(model, f, ExactEngine{}, 1)) {
    for (double v : law.values()) out.insert(v);
  }
  return {out.begin(), out.end()};
}

// Thresholds a checker forms by adding or scaling its parameters.
std::vector<double> composite_levels(const std::string& inequality, const Json& p) {
  std::vector<double> out;
  if (inequality == "hj-general") {
    const auto ns = p.at("n_i").get<std::vector<std::size_t>>();
    const auto ts = p.at("t").get<std::vector<double>>();
    const double s = p.at("s").get<double>();
    std::size_t K = 0;
    for (auto ni : ns) K += ni;
    double thr = (2.0 * static_cast<double>(ns[0]) - 1.0) * ts[0];
    for (std::size_t i = 1; i < ns.size(); ++i) thr += 2.0 * static_cast<double>(ns[i]) * ts[i];
    out.push_back(thr + static_cast<double>(K - 1) * s);
    out.push_back(static_cast<double>(K - 1) * s);
  } else if (inequality == "hj-lt") {
    out.push_back(3.0 * p.at("t").get<double>() + p.at("s").get<double>());
  } else if (inequality == "hj-hm") {
    const double K = p.at("K").get<double>();
    out.push_back(2.0 * K * p.at("t").get<double>() + (K - 1.0) * p.at("s").get<double>());
    out.push_back((K - 1.0) * p.at("s").get<double>());
  } else if (inequality == "ottaviani-skorohod") {
    out.push_back(p.at("alpha").get<double>() + p.at("beta").get<double>());
  } else if (inequality == "mogulskii") {
    out.push_back(p.at("a").get<double>() + p.at("b").get<double>());
    out.push_back(p.at("a").get<double>() - p.at("b").get<double>());
  } else if (inequality == "levy-ottaviani") {
    double total = 0.0;
    for (double a : p.at("a").get<std::vector<double>>()) total += a;
    out.push_back(total);
  }
  return out;
}

// A level within rounding of an atom but not equal to it cannot be resolved
// in floating point: the exact real values may tie.
bool ambiguous(const std::vector<double>& levels, const std::vector<double>& atoms) {
  for (double l : levels) {
    for (double v : atoms) {
      if (v != l && std::fabs(v - l) <= 1e-9 * (1.0 + std::fabs(l))) return true;
    }
  }
  return false;
}

bool lambda_below_one(const PathModel& model) {
  return exact_event_prob(model, [](const PathStatistics& x) { return x.U() >= 1.0; },
                          ExactEngine{}, 1) < 1.0;
}

}  // namespace

std::optional<Trial> draw_trial(std::string_view checker, const InstancePtr& instance, Rng& rng) {
  if (!checker_applies(checker, *instance)) return std::nullopt;
  const auto& names = battery_checkers();
  if (std::find(names.begin(), names.end(), checker) == names.end()) {
    throw UnknownName("unknown battery checker '" + std::string(checker) + "'");
  }
  Trial trial;
  trial.checker = std::string(checker);
  trial.model = draw_model(checker, instance, rng);
  if (checker == "kn") {
    int attempts = 0;
    while (!lambda_below_one(trial.model)) {
      if (++attempts > 64) return std::nullopt;
      trial.model = draw_model(checker, instance, rng);
    }
  }
  const auto n = trial.model.length();
  const auto grid = threshold_grid(trial.model);
  const auto atoms = path_atoms(trial.model);
  auto draw_params = [&] {
    Json p = Json::object();
    if (checker == "hj-general" || checker == "hj-general-strengthened") {
      trial.inequality = "hj-general";
      const auto k = std::min(pick_count(rng, 1, 3), n + 1);
      std::vector<std::size_t> ns(k);
      for (auto& ni : ns) ni = pick_count(rng, 1, 3);
      auto total = [&] { std::size_t s = 0; for (auto ni : ns) s += ni; return s; };
      while (total() > n + 1) *std::max_element(ns.begin(), ns.end()) -= 1;
      std::vector<double> ts(k);
      for (auto& ti : ts) ti = pick(grid.fine, rng);
      p["n_i"] = ns;
      p["t"] = ts;
      p["s"] = pick(grid.fine, rng);
      p["strengthened"] = checker == "hj-general-strengthened";
    } else if (checker == "hj-lt") {
      trial.inequality = "hj-lt";
      p["t"] = pick(grid.fine_positive, rng);
      p["s"] = pick(grid.fine_positive, rng);
    } else if (checker == "hj-hm") {
      trial.inequality = "hj-hm";
      p["K"] = pick_count(rng, 1, 4);
      p["t"] = pick(grid.fine_positive, rng);
      p["s"] = pick(grid.fine_positive, rng);
    } else if (checker == "js") {
      trial.inequality = "js";
      p["k"] = pick_count(rng, 1, 4);
      p["t"] = pick(grid.fine_positive, rng);
    } else if (checker == "kn") {
      trial.inequality = "kn";
      p["k"] = pick_count(rng, 1, std::min<std::size_t>(4, n + 1));
    } else if (checker == "ottaviani-skorohod") {
      trial.inequality = "ottaviani-skorohod";
      p["alpha"] = pick(grid.positive, rng);
      p["beta"] = pick(grid.positive, rng);
    } else if (checker == "mogulskii-min" || checker == "mogulskii-max") {
      trial.inequality = "mogulskii";
      p["variant"] = checker == "mogulskii-min" ? "min" : "max";
      p["m"] = pick_count(rng, 1, n);
      p["a"] = pick(grid.all, rng);
      p["b"] = pick(grid.all, rng);
    } else if (checker.starts_with("levy-ottaviani-")) {
      trial.inequality = "levy-ottaviani";
      const auto l = static_cast<std::size_t>(checker.back() - '0');
      std::vector<double> a(l);
      for (auto& ai : a) ai = pick(grid.fine, rng);
      p["a"] = a;
    } else {
      trial.inequality = "moment";
      p["p"] = parse_real(checker.substr(std::string_view("moment-").size()));
    }
    return p;
  };
  Json p = draw_params();
  for (int attempts = 0; ambiguous(composite_levels(trial.inequality, p), atoms); ++attempts) {
    if (attempts == 64) return std::nullopt;
    p = draw_params();
  }
  trial.params = std::move(p);
  return trial;
}

std::vector<InequalityReport> run_trial(const Trial& trial, const Engine& engine,
                                        std::size_t workers) {
  return run_inequality(trial.inequality, trial.model, trial.params, engine, workers);
}

std::vector<InequalityReport> BatteryResult::reports() const {
  std::vector<InequalityReport> out;
  for (const auto& e : entries) out.insert(out.end(), e.reports.begin(), e.reports.end());
  return out;
}

BatterySummary BatteryResult::summary() const { return summarize(reports()); }

std::size_t BatteryResult::errors() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.error.has_value(); }));
}

BatteryResult run_battery(const BatteryOptions& options) {
  struct Cell {
    std::string checker;
    InstancePtr instance;
  };
  std::vector<Cell> cells;
  for (const auto& checker : options.checkers) {
    for (const auto& name : options.instances) {
      auto instance = find_instance(name);
      if (checker_applies(checker, *instance)) cells.push_back({checker, std::move(instance)});
    }
  }
  BatteryResult result;
  result.entries.resize(cells.size() * options.configs);
  const auto workers = options.workers == 0 ? default_parallelism() : options.workers;
  parallel_for(result.entries.size(), workers, [&](std::size_t task, std::size_t) {
    const auto cell_index = task / options.configs;
    const auto trial_index = task % options.configs;
    const auto& cell = cells[cell_index];
    auto& entry = result.entries[task];
    entry.checker = cell.checker;
    entry.instance = cell.instance->name();
    entry.trial = trial_index;
    Rng rng(derive_seed(derive_seed(options.seed, cell_index), trial_index));
    try {
      const auto trial = draw_trial(cell.checker, cell.instance, rng);
      if (!trial) {
        entry.error = "no admissible configuration drawn";
        return;
      }
      entry.reports = run_trial(*trial);
    } catch (const Error& e) {
      entry.error = e.what();
    }
  });
  return result;
}

namespace {

bool any_violated(const std::vector<InequalityReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const auto& r) { return r.verdict == Verdict::violated; });
}

std::optional<std::vector<InequalityReport>> try_run(const Trial& trial) {
  try {
    return run_trial(trial);
  } catch (const Error&) {
    return std::nullopt;
  }
}

FiniteDistribution without_point(const FiniteDistribution& law, std::size_t r) {
  std::vector<Element> support;
  std::vector<double> weights;
  for (std::size_t i = 0; i < law.size(); ++i) {
    if (i == r) continue;
    support.push_back(law.support()[i]);
    weights.push_back(law.weights()[i]);
  }
  auto copy = weights;
  const double total = sorted_sum(copy);
  for (auto& w : weights) w /= total;
  return FiniteDistribution(law.instance_ptr(), std::move(support), std::move(weights));
}

// Greedy: accept the first smaller model that still violates, repeat.
std::vector<InequalityReport> shrink(Trial trial, std::vector<InequalityReport> reports) {
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t j = 0; j < trial.model.length() && !improved; ++j) {
      const auto& law = trial.model.variables[j];
      for (std::size_t r = 0; r < law.size() && law.size() > 1 && !improved; ++r) {
        auto candidate = trial;
        candidate.model.variables[j] = without_point(law, r);
        if (auto out = try_run(candidate); out && any_violated(*out)) {
          trial = std::move(candidate);
          reports = std::move(*out);
          improved = true;
        }
      }
    }
    if (!improved && trial.model.length() > 1) {
      auto candidate = trial;
      candidate.model.variables.pop_back();
      if (auto out = try_run(candidate); out && any_violated(*out)) {
        trial = std::move(candidate);
        reports = std::move(*out);
        improved = true;
      }
    }
  }
  std::vector<InequalityReport> out;
  for (auto& r : reports) {
    if (r.verdict == Verdict::violated) {
      r.details["checker"] = trial.checker;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

std::vector<InequalityReport> stress_search(const InstancePtr& instance, std::string_view checker,
                                            std::uint64_t seed, std::size_t trials,
                                            std::size_t workers) {
  std::vector<std::vector<InequalityReport>> found(trials);
  parallel_for(trials, workers == 0 ? default_parallelism() : workers,
               [&](std::size_t i, std::size_t) {
                 Rng rng(derive_seed(seed, i));
                 std::optional<Trial> trial;
                 try {
                   trial = draw_trial(checker, instance, rng);
                 } catch (const Error&) {
                   return;
                 }
                 if (!trial) return;
                 auto reports = try_run(*trial);
                 if (reports && any_violated(*reports)) found[i] = shrink(*trial, std::move(*reports));
               });
  std::vector<InequalityReport> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

}  // namespace semilab
