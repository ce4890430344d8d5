#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "oracle.hpp"
#include "semilab/algebra/catalog.hpp"
#include "semilab/algebra/instances.hpp"
#include "semilab/error.hpp"
#include "semilab/probability/engine.hpp"

namespace helpers {

using namespace semilab;

inline oracle::Pt to_pt(const Element& e) {
  if (const auto* v = std::get_if<RealVector>(&e)) return {(*v)[0], (*v)[1], (*v)[2]};
  if (const auto* f = std::get_if<AffineMap>(&e)) return {f->scale, f->shift, 0.0};
  if (const auto* h = std::get_if<HeisenbergPoint>(&e)) return {h->x, h->y, h->z};
  if (const auto* c = std::get_if<CyclicIndex>(&e)) return {static_cast<double>(c->k), 0.0, 0.0};
  ADD_FAILURE() << "no oracle coordinates";
  return {};
}

inline oracle::Geometry geometry(const std::string& name) {
  if (name == "euclidean1") return oracle::line();
  if (name == "euclidean2") return oracle::plane();
  if (name == "affine") return oracle::affine();
  if (name == "heisenberg") return oracle::heisenberg();
  if (name == "cyclic5") return oracle::cyclic(5);
  ADD_FAILURE() << "no oracle geometry for " << name;
  return oracle::line();
}

// "0:0.5,1:0.5" replicated n times, base points at the identity.
inline PathModel model(const std::string& instance, const std::string& dists, std::size_t n = 0,
                       Orientation orientation = Orientation::left) {
  const auto inst = find_instance(instance);
  auto vars = parse_variables(inst, dists, n);
  const auto e = *inst->identity();
  return PathModel{std::move(vars), e, e, orientation};
}

inline std::vector<oracle::Law> oracle_laws(const PathModel& model) {
  std::vector<oracle::Law> out;
  for (const auto& law : model.variables) {
    oracle::Law l;
    for (std::size_t i = 0; i < law.size(); ++i) l.emplace_back(to_pt(law.support()[i]), law.weights()[i]);
    out.push_back(std::move(l));
  }
  return out;
}

inline std::vector<oracle::Path> oracle_paths(const PathModel& model) {
  return oracle::enumerate(geometry(model.instance().name()), oracle_laws(model), to_pt(model.z0),
                           to_pt(model.z1));
}

// n <= 4 variables, up to 3 sampled support points each, random weights;
// base points sampled too.
inline PathModel random_model(const std::string& instance, Rng& rng) {
  const auto inst = find_instance(instance);
  const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
  std::vector<FiniteDistribution> vars;
  for (std::size_t j = 0; j < n; ++j) {
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    std::vector<Element> support;
    std::vector<double> raw;
    while (support.size() < m) {
      const auto g = inst->sample(rng, SampleStyle::lattice);
      bool fresh = true;
      for (const auto& s : support) fresh = fresh && inst->encode(s) != inst->encode(g);
      if (!fresh) {
        if (inst->is_discrete()) break;
        continue;
      }
      support.push_back(g);
      raw.push_back(0.1 + uniform01(rng));
    }
    auto copy = raw;
    const double total = sorted_sum(copy);
    for (auto& w : raw) w /= total;
    vars.emplace_back(inst, std::move(support), std::move(raw));
  }
  const auto z0 = inst->sample(rng, SampleStyle::lattice);
  const auto z1 = inst->sample(rng, SampleStyle::lattice);
  return PathModel{std::move(vars), z0, z1, Orientation::left};
}

}  // namespace helpers
