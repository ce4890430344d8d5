#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "semilab/inequalities/report.hpp"

namespace semilab {

// Names accepted by run_inequality: hj-general, hj-lt, hj-hm, js, kn,
// ottaviani-skorohod, mogulskii, levy-ottaviani, moment.
const std::vector<std::string>& inequality_names();

// Runs the named checker with parameters read from `params` (the keys each
// checker echoes into InequalityReport::params). kn may yield two reports.
// Throws UnknownName for an unknown inequality and InvalidArgument for
// missing or malformed parameters.
std::vector<InequalityReport> run_inequality(std::string_view name, const PathModel& model,
                                             const Json& params, const Engine& engine,
                                             std::size_t workers = 0);

// Rebuilds the path model from the echo written by model_to_json: "dists"
// (one law per variable, or one law with "n"), "z0", "z1", "orientation".
// Base points default to the identity when the instance has one.
PathModel model_from_json(const InstancePtr& instance, const Json& params);

}  // namespace semilab
