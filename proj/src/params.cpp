#include "loopgate/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "loopgate/units.hpp"

namespace loopgate {

double PhysicalParams::epsilon() const { return units::to_angular_frequency(epsilon_mev); }
double PhysicalParams::omega() const { return units::to_angular_frequency(omega_mev); }
double PhysicalParams::temperature() const { return units::to_angular_frequency(temperature_mev); }

double PhysicalParams::lambda_plus() const {
  const double e = epsilon(), o = omega();
  return 0.5 * (e + std::sqrt(e * e + 4.0 * o * o));
}

double PhysicalParams::lambda_minus() const {
  const double e = epsilon(), o = omega();
  return 0.5 * (e - std::sqrt(e * e + 4.0 * o * o));
}

GateSpec GateSpec::not_gate() { return {std::numbers::pi / 2, GateLabel::kNot}; }
GateSpec GateSpec::hadamard_gate() { return {std::numbers::pi / 4, GateLabel::kHadamard}; }
GateSpec GateSpec::custom(double solid_angle) { return {solid_angle, GateLabel::kCustom}; }

std::vector<std::string> validate(const PhysicalParams& params) {
  if (params.omega_mev <= 0.0) throw std::invalid_argument("omega must be positive");
  if (params.epsilon_mev <= 0.0) throw std::invalid_argument("epsilon must be positive");
  if (params.v_max <= 0.0) throw std::invalid_argument("v_max must be positive");
  if (params.temperature_mev < 0.0) throw std::invalid_argument("temperature must be >= 0");

  std::vector<std::string> warnings;
  if (params.v_max > params.omega() / 10.0) {
    warnings.push_back("adiabaticity: v_max exceeds Omega/10 in shared units");
  }
  return warnings;
}

void validate_or_throw(const GateSpec& gate) {
  constexpr double four_pi = 4.0 * std::numbers::pi;
  if (!(gate.solid_angle > 0.0 && gate.solid_angle < four_pi)) {
    throw std::invalid_argument("gate solid angle must lie in (0, 4pi)");
  }
  const double tol = 1e-12;
  if (gate.label == GateLabel::kNot && std::abs(gate.solid_angle - std::numbers::pi / 2) > tol) {
    throw std::invalid_argument("NOT gate requires solid angle pi/2");
  }
  if (gate.label == GateLabel::kHadamard &&
      std::abs(gate.solid_angle - std::numbers::pi / 4) > tol) {
    throw std::invalid_argument("Hadamard gate requires solid angle pi/4");
  }
}

}  // namespace loopgate
