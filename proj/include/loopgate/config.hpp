#pragma once

#include <map>
#include <string>
#include <vector>

#include "loopgate/bath.hpp"
#include "loopgate/params.hpp"

namespace loopgate {

struct RunConfig {
  PhysicalParams params;
  BathSpec bath;
  GateSpec gate;

  // command grids / knobs
  double t_ad_ps = 50.0;
  double t_budget_ps = 50.0;
  int theta_points = 199;
  double vt_min = 0.0;   // 0: derived from the gate
  double vt_max = 0.0;
  int time_points = 240;
  int resolution = 64;
  int samples = 1000;
  int steps = 4000;
  std::uint64_t seed = 1;

  static RunConfig defaults();  // shipped parameter set
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key-value file with [system]/[bath]/[gate]/[run] sections; '#' comments.
// Unit suffixes are part of the key names. Unknown keys are errors.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// 12-significant-digit serialization used by every emitter (determinism).
std::string format_number(double value);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace loopgate
