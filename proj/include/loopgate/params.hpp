#pragma once

#include <string>
#include <vector>

namespace loopgate {

// Laser/system parameters. Energies in meV, angular speed in rad/ps.
struct PhysicalParams {
  double epsilon_mev = 1000.0;  // degenerate level energy
  double omega_mev = 10.0;      // Rabi norm
  double v_max = 0.0;           // adiabatic speed cap, rad/ps
  double temperature_mev = 0.01;

  double epsilon() const;  // rad/ps
  double omega() const;    // rad/ps
  double temperature() const;  // rad/ps (k_B = 1)

  // Bright-state energies [eps +- sqrt(eps^2+4 Omega^2)]/2, rad/ps.
  double lambda_plus() const;
  double lambda_minus() const;
};

enum class GateLabel { kNot, kHadamard, kCustom };

struct GateSpec {
  double solid_angle = 0.0;  // rad
  GateLabel label = GateLabel::kCustom;

  static GateSpec not_gate();       // a = pi/2
  static GateSpec hadamard_gate();  // a = pi/4
  static GateSpec custom(double solid_angle);
};

// Empty vector iff all invariants hold; adiabaticity violations are warnings.
// Throws std::invalid_argument on non-positive omega, epsilon or v_max,
// or negative temperature.
std::vector<std::string> validate(const PhysicalParams& params);

void validate_or_throw(const GateSpec& gate);

}  // namespace loopgate
