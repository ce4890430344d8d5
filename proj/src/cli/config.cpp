#include "semilab/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "semilab/algebra/catalog.hpp"
#include "semilab/inequalities/registry.hpp"

namespace semilab {

namespace {

bool is_model_key(const std::string& key) {
  return key == "n" || key == "dists" || key == "z0" || key == "z1" || key == "orientation";
}

bool is_integer_key(const std::string& key) {
  return key == "K" || key == "k" || key == "m" || key == "n_i";
}

std::string dists_text(const Json& dists) {
  if (dists.is_string()) return dists.get<std::string>();
  if (!dists.is_array()) throw InvalidArgument("'dists' must be a string or an array of strings");
  std::string out;
  for (const auto& d : dists) {
    if (!out.empty()) out += ";";
    out += d.get<std::string>();
  }
  return out;
}

Json parse_scalar(const std::string& key, std::string_view text) {
  const auto trimmed = trim(text);
  if (is_integer_key(key)) {
    try {
      std::size_t used = 0;
      const auto v = std::stoll(std::string(trimmed), &used);
      if (used != trimmed.size() || v < 0) throw std::invalid_argument("bad");
      return v;
    } catch (const std::exception&) {
      throw InvalidArgument("--" + key + " expects a nonnegative integer, got '" +
                            std::string(trimmed) + "'");
    }
  }
  try {
    return json_real(parse_real(trimmed));
  } catch (const InvalidElement&) {
    throw InvalidArgument("--" + key + " expects a number, got '" + std::string(trimmed) + "'");
  }
}

}  // namespace

RunConfig config_from_json(const Json& value) {
  if (!value.is_object()) throw InvalidArgument("config must be a JSON object");
  RunConfig c;
  try {
    c.instance = value.at("instance").get<std::string>();
    c.inequality = value.at("inequality").get<std::string>();
  } catch (const Json::exception&) {
    throw InvalidArgument("config needs string fields 'instance' and 'inequality'");
  }
  // Reports name the two Klass-Nowicki halves separately.
  if (c.inequality.starts_with("kn-")) c.inequality = "kn";

  Json merged = value.value("params", Json::object());
  for (const auto& key : {"dists", "n", "z0", "z1", "orientation"}) {
    if (value.contains(key)) merged[key] = value.at(key);
  }
  try {
    for (const auto& [key, v] : merged.items()) {
      if (key == "dists") {
        c.dists = dists_text(v);
      } else if (key == "n") {
        c.n = v.get<std::size_t>();
      } else if (key == "z0") {
        c.z0 = v.get<std::string>();
      } else if (key == "z1") {
        c.z1 = v.get<std::string>();
      } else if (key == "orientation") {
        c.orientation = parse_orientation(v.get<std::string>());
      } else {
        c.params[key] = v;
      }
    }
    // A report lists one law per variable; n would then be redundant.
    if (merged.contains("dists") && merged.at("dists").is_array() &&
        merged.at("dists").size() == c.n) {
      c.n = 0;
    }
    if (value.contains("engine")) c.engine = engine_from_json(value.at("engine"));
    if (value.contains("out")) c.out = value.at("out").get<std::string>();
    if (value.contains("format")) c.format = value.at("format").get<std::string>();
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed config: ") + e.what());
  }
  if (c.dists.empty()) throw InvalidArgument("config needs 'dists'");
  return c;
}

Json config_to_json(const RunConfig& c) {
  Json out;
  out["instance"] = c.instance;
  out["inequality"] = c.inequality;
  out["dists"] = c.dists;
  if (c.n != 0) out["n"] = c.n;
  if (c.z0) out["z0"] = *c.z0;
  if (c.z1) out["z1"] = *c.z1;
  out["orientation"] = to_string(c.orientation);
  out["engine"] = engine_to_json(c.engine);
  out["params"] = c.params;
  return out;
}

void set_param(RunConfig& config, const std::string& key, const std::string& text) {
  if (key == "variant") {
    config.params[key] = std::string(trim(text));
    return;
  }
  if (key == "strengthened") {
    const auto t = trim(text);
    if (t == "true" || t == "1" || t.empty()) {
      config.params[key] = true;
    } else if (t == "false" || t == "0") {
      config.params[key] = false;
    } else {
      throw InvalidArgument("--strengthened expects true or false");
    }
    return;
  }
  if (text.find(',') != std::string::npos || key == "n_i") {
    Json list = Json::array();
    for (auto field : split_fields(text)) list.push_back(parse_scalar(key, field));
    config.params[key] = list;
    return;
  }
  config.params[key] = parse_scalar(key, text);
}

Json run_params(const RunConfig& config) {
  Json p = Json::object();
  p["dists"] = config.dists;
  if (config.n != 0) p["n"] = config.n;
  if (config.z0) p["z0"] = *config.z0;
  if (config.z1) p["z1"] = *config.z1;
  p["orientation"] = to_string(config.orientation);
  for (const auto& [key, v] : config.params.items()) {
    if (!is_model_key(key)) p[key] = v;
  }
  return p;
}

PathModel build_model(const RunConfig& config) {
  const auto instance = find_instance(config.instance);
  return model_from_json(instance, run_params(config));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(path + " is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

void probe_writable(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot write " + path);
}

}  // namespace semilab
