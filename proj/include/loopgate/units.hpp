#pragma once

namespace loopgate::units {

// hbar in meV*ps; k_B = 1 throughout (temperatures are energies).
inline constexpr double hbar_mev_ps = 0.6582119569;

// meV -> rad/ps
inline constexpr double to_angular_frequency(double energy_mev) {
  return energy_mev / hbar_mev_ps;
}

// rad/ps -> meV
inline constexpr double to_energy(double omega_rad_per_ps) {
  return omega_rad_per_ps * hbar_mev_ps;
}

inline constexpr double kelvin_to_mev(double kelvin) {
  return kelvin * 0.08617333262;  // k_B in meV/K
}

}  // namespace loopgate::units
