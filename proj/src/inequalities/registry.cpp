#include "semilab/inequalities/registry.hpp"

#include "semilab/error.hpp"
#include "semilab/inequalities/classical.hpp"
#include "semilab/inequalities/hoffmann_jorgensen.hpp"
#include "semilab/inequalities/maximal.hpp"
#include "semilab/inequalities/moments.hpp"

namespace semilab {

const std::vector<std::string>& inequality_names() {
  static const std::vector<std::string> names{
      "hj-general", "hj-lt",          "hj-hm",     "js",    "kn", "ottaviani-skorohod",
      "mogulskii",  "levy-ottaviani", "moment"};
  return names;
}

namespace {

const Json& require(const Json& params, const char* key) {
  if (!params.contains(key)) throw InvalidArgument(std::string("missing parameter '") + key + "'");
  return params.at(key);
}

double real_param(const Json& params, const char* key) {
  try {
    return real_from_json(require(params, key));
  } catch (const InvalidElement&) {
    throw InvalidArgument(std::string("parameter '") + key + "' is not a number");
  }
}

std::size_t count_param(const Json& params, const char* key) {
  const auto& v = require(params, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InvalidArgument(std::string("parameter '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> real_list(const Json& params, const char* key) {
  const auto& v = require(params, key);
  std::vector<double> out;
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(real_from_json(x));
  } else {
    out.push_back(real_from_json(v));
  }
  return out;
}

std::vector<std::size_t> count_list(const Json& params, const char* key) {
  const auto& v = require(params, key);
  std::vector<std::size_t> out;
  const auto push = [&](const Json& x) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      throw InvalidArgument(std::string("parameter '") + key + "' must list nonnegative integers");
    }
    out.push_back(x.get<std::size_t>());
  };
  if (v.is_array()) {
    for (const auto& x : v) push(x);
  } else {
    push(v);
  }
  return out;
}

}  // namespace

std::vector<InequalityReport> run_inequality(std::string_view name, const PathModel& model,
                                             const Json& params, const Engine& engine,
                                             std::size_t workers) {
  if (name == "hj-general") {
    HJParams p;
    p.n = count_list(params, "n_i");
    p.t = real_list(params, "t");
    if (p.t.size() == 1 && p.n.size() > 1) p.t.assign(p.n.size(), p.t.front());
    p.s = real_param(params, "s");
    p.strengthened = params.value("strengthened", false);
    return {hj_general(model, p, engine, workers)};
  }
  if (name == "hj-lt") {
    return {hj_lt(model, real_param(params, "t"), real_param(params, "s"), engine, workers)};
  }
  if (name == "hj-hm") {
    return {hj_hm(model, count_param(params, "K"), real_param(params, "t"),
                  real_param(params, "s"), engine, workers)};
  }
  if (name == "js") {
    return {js_bound(model, count_param(params, "k"), real_param(params, "t"), engine, workers)};
  }
  if (name == "kn") return kn_bounds(model, count_param(params, "k"), engine, workers);
  if (name == "ottaviani-skorohod") {
    return {ottaviani_skorohod(model, real_param(params, "alpha"), real_param(params, "beta"),
                               engine, workers)};
  }
  if (name == "mogulskii") {
    const auto variant = parse_mogulskii_variant(params.value("variant", std::string("max")));
    return {mogulskii(model, params.contains("m") ? count_param(params, "m") : 1,
                      real_param(params, "a"), real_param(params, "b"), variant, engine,
                      workers)};
  }
  if (name == "levy-ottaviani") {
    return {levy_ottaviani(model, real_list(params, "a"), engine, workers)};
  }
  if (name == "moment") return {moment_bound(model, real_param(params, "p"), engine, workers)};
  throw UnknownName("unknown inequality '" + std::string(name) + "'");
}

PathModel model_from_json(const InstancePtr& instance, const Json& params) {
  const auto& dists = require(params, "dists");
  const std::size_t n = params.contains("n") ? count_param(params, "n") : 0;
  PathModel model;
  if (dists.is_string()) {
    model.variables = parse_variables(instance, dists.get<std::string>(), n);
  } else if (dists.is_array()) {
    for (const auto& d : dists) model.variables.push_back(parse_distribution(instance, d.get<std::string>()));
    if (n != 0 && model.variables.size() == 1) {
      model.variables = std::vector<FiniteDistribution>(n, model.variables.front());
    } else if (n != 0 && model.variables.size() != n) {
      throw InvalidArgument("dists lists " + std::to_string(model.variables.size()) +
                            " laws for n = " + std::to_string(n));
    }
  } else {
    throw InvalidArgument("'dists' must be a string or an array of strings");
  }
  const auto base = [&](const char* key) -> Element {
    if (params.contains(key)) return instance->decode(params.at(key).get<std::string>());
    if (const auto e = instance->identity()) return *e;
    throw InvalidArgument(instance->name() + " has no identity; give " + key + " explicitly");
  };
  model.z0 = base("z0");
  model.z1 = base("z1");
  model.orientation = parse_orientation(params.value("orientation", std::string("left")));
  model.validate();
  return model;
}

}  // namespace semilab
