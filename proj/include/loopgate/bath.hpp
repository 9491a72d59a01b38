#pragma once

#include <complex>

#include "loopgate/params.hpp"

namespace loopgate {

// J(w) = k w^s exp(-(w/w_c)^2). Parameters stored in meV conventions
// (k in meV^(1-s)); computational accessors are in natural units
// (rad/ps, ps, hbar = k_B = 1).
struct BathSpec {
  double s = 3.0;
  double k_mev = 1e-2;        // meV^(1-s)
  double omega_c_mev = 0.5;   // meV

  double omega_c() const;     // rad/ps
  double k_natural() const;   // (rad/ps)^(1-s)
  double j_natural(double omega) const;  // omega in rad/ps -> 1/ps
  double cutoff_upper() const { return 8.0 * omega_c(); }  // quadrature truncation
};

void validate_or_throw(const BathSpec& spec);

// Spec interface: omega and result in meV. Throws on negative omega.
double spectral_density(double omega_mev, const BathSpec& spec);

// g(tau) = int_0^inf J(w)[coth(w/2T) cos(w tau) - i sin(w tau)] dw,
// tau in ps, T in rad/ps. Throws for s < 1 with T > 0.
std::complex<double> correlation(double tau, const BathSpec& spec, double temperature);

// G(t) = int_0^t dtau { Re g cos(w0n tau) + Im g sin(w0n tau) },
// w0n in rad/ps. Evaluated in the frequency domain (exact tau integral).
double kernel_G(double t, double omega_0n, const BathSpec& spec, double temperature);

// (pi/2) J(|w0n|) [coth(|w0n|/2T) - sgn(w0n)]
double kernel_G_infinity(double omega_0n, const BathSpec& spec, double temperature);

// J(|w0n|)[coth(|w0n|/2T) - sgn(w0n)], 1/ps. Rejects w0n == 0.
double golden_rule_rate(double omega_0n, const BathSpec& spec, double temperature);

// (J(w)/w) coth(w/2T) with the analytic w->0 limit; the pure-dephasing
// spectral weight.
double dephasing_weight(double omega, const BathSpec& spec, double temperature);

struct RateTable {
  double omega_01 = 0.0;  // eps - lambda_plus (< 0)
  double omega_02 = 0.0;  // eps - lambda_minus (> 0)
  double gamma_01 = 0.0;
  double gamma_02 = 0.0;
  double K = 0.0;
};

// K = sum_n Gamma_0n / sqrt(1 + [(lambda_n - eps)/Omega]^2). The paper's
// printed 1/8 is not applied; this normalization is the one its quoted
// error values satisfy. 1/ps.
double composite_K(const PhysicalParams& params, const BathSpec& spec, double temperature);

RateTable make_rate_table(const PhysicalParams& params, const BathSpec& spec,
                          double temperature);

}  // namespace loopgate
