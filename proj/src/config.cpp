#include "loopgate/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "loopgate/units.hpp"

namespace loopgate {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return out;
  } catch (const std::exception&) {
    throw ConfigError("invalid number for key '" + key + "': " + value);
  }
}

}  // namespace

RunConfig RunConfig::defaults() {
  RunConfig cfg;
  cfg.params.epsilon_mev = 1000.0;
  cfg.params.omega_mev = 10.0;
  cfg.params.v_max = units::to_angular_frequency(10.0) / 50.0;
  cfg.params.temperature_mev = 0.01;
  cfg.bath = BathSpec{3.0, 1e-2, 0.5};
  cfg.gate = GateSpec::not_gate();
  return cfg;
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg = RunConfig::defaults();
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  bool vmax_set = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("malformed section at line " + std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      if (section != "system" && section != "bath" && section != "gate" && section != "run") {
        throw ConfigError("unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key=value at line " + std::to_string(lineno));
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section == "system") {
      if (key == "epsilon_mev") cfg.params.epsilon_mev = parse_double(key, value);
      else if (key == "omega_mev") cfg.params.omega_mev = parse_double(key, value);
      else if (key == "vmax_rad_per_ps") { cfg.params.v_max = parse_double(key, value); vmax_set = true; }
      else if (key == "temperature_mev") cfg.params.temperature_mev = parse_double(key, value);
      else throw ConfigError("unknown key '" + key + "' in [system]");
    } else if (section == "bath") {
      if (key == "s") cfg.bath.s = parse_double(key, value);
      else if (key == "k_mev") cfg.bath.k_mev = parse_double(key, value);
      else if (key == "omega_c_mev") cfg.bath.omega_c_mev = parse_double(key, value);
      else throw ConfigError("unknown key '" + key + "' in [bath]");
    } else if (section == "gate") {
      if (key == "label") {
        if (value == "NOT") cfg.gate = GateSpec::not_gate();
        else if (value == "HADAMARD") cfg.gate = GateSpec::hadamard_gate();
        else if (value == "CUSTOM") cfg.gate.label = GateLabel::kCustom;
        else throw ConfigError("unknown gate label: " + value);
      } else if (key == "solid_angle_rad") {
        cfg.gate = GateSpec::custom(parse_double(key, value));
      } else {
        throw ConfigError("unknown key '" + key + "' in [gate]");
      }
    } else if (section == "run") {
      if (key == "t_ad_ps") cfg.t_ad_ps = parse_double(key, value);
      else if (key == "t_budget_ps") cfg.t_budget_ps = parse_double(key, value);
      else if (key == "theta_points") cfg.theta_points = static_cast<int>(parse_double(key, value));
      else if (key == "vt_min") cfg.vt_min = parse_double(key, value);
      else if (key == "vt_max") cfg.vt_max = parse_double(key, value);
      else if (key == "time_points") cfg.time_points = static_cast<int>(parse_double(key, value));
      else if (key == "resolution") cfg.resolution = static_cast<int>(parse_double(key, value));
      else if (key == "samples") cfg.samples = static_cast<int>(parse_double(key, value));
      else if (key == "steps") cfg.steps = static_cast<int>(parse_double(key, value));
      else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_double(key, value));
      else throw ConfigError("unknown key '" + key + "' in [run]");
    } else {
      throw ConfigError("key outside any section at line " + std::to_string(lineno));
    }
  }
  if (!vmax_set) {
    // default cap tracks the configured laser intensity
    cfg.params.v_max = units::to_angular_frequency(cfg.params.omega_mev) / 50.0;
  }
  try {
    validate(cfg.params);
    validate_or_throw(cfg.bath);
    validate_or_throw(cfg.gate);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << header[i] << (i + 1 < header.size() ? "," : "\n");
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << format_number(row[i]) << (i + 1 < row.size() ? "," : "\n");
    }
  }
}

}  // namespace loopgate
