#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "semilab/error.hpp"
#include "semilab/inequalities/report.hpp"

namespace semilab {

// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

// Everything one `verify` run needs. The inequality parameters use the keys
// the checker echoes into its report, so a report's params re-run as a
// config.
struct RunConfig {
  std::string instance;
  std::string inequality;
  std::string dists;  // "codec:w,..." per variable, separated by ';'
  std::size_t n = 0;  // replicate a single law n times
  Json params = Json::object();
  Engine engine = ExactEngine{};
  Orientation orientation = Orientation::left;
  std::optional<std::string> z0;
  std::optional<std::string> z1;
  std::optional<std::string> out;
  std::string format = "json";
  std::size_t workers = 0;
};

// Accepts a config object {"instance", "inequality", "dists", "n", "z0",
// "z1", "orientation", "engine", "params"} or a report (whose params hold
// the model echo next to the inequality parameters).
RunConfig config_from_json(const Json& value);
Json config_to_json(const RunConfig& config);

// Sets one inequality parameter from flag text: "0.3,0.3" becomes an array,
// K, k, m and n_i are integers, variant is a string, strengthened a bool.
void set_param(RunConfig& config, const std::string& key, const std::string& text);

// Model echo keys merged with the inequality parameters.
Json run_params(const RunConfig& config);

PathModel build_model(const RunConfig& config);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
// Fails with IoError when `path` cannot be opened for writing.
void probe_writable(const std::string& path);

}  // namespace semilab
