#include "loopgate/bath.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "loopgate/numerics.hpp"
#include "loopgate/units.hpp"

namespace loopgate {

namespace {

constexpr double kPi = std::numbers::pi;

double coth(double x) { return 1.0 / std::tanh(x); }

int oscillation_panels(double time_scale, double bandwidth) {
  const double cycles = std::abs(time_scale) * bandwidth / (2.0 * kPi);
  const int panels = static_cast<int>(cycles * 4.0) + 4;
  return panels > 20000 ? 20000 : panels;
}

}  // namespace

double BathSpec::omega_c() const { return units::to_angular_frequency(omega_c_mev); }

double BathSpec::k_natural() const {
  return k_mev * std::pow(units::hbar_mev_ps, s - 1.0);
}

double BathSpec::j_natural(double omega) const {
  const double wc = omega_c();
  return k_natural() * std::pow(omega, s) * std::exp(-(omega / wc) * (omega / wc));
}

void validate_or_throw(const BathSpec& spec) {
  if (spec.s < 0.0) throw std::invalid_argument("bath exponent s must be >= 0");
  if (spec.k_mev < 0.0) throw std::invalid_argument("bath coupling k must be >= 0");
  if (spec.omega_c_mev <= 0.0) throw std::invalid_argument("cutoff omega_c must be positive");
}

double spectral_density(double omega_mev, const BathSpec& spec) {
  if (omega_mev < 0.0) throw std::invalid_argument("spectral density needs omega >= 0");
  const double x = omega_mev / spec.omega_c_mev;
  return spec.k_mev * std::pow(omega_mev, spec.s) * std::exp(-x * x);
}

std::complex<double> correlation(double tau, const BathSpec& spec, double temperature) {
  validate_or_throw(spec);
  if (spec.s < 1.0 && temperature > 0.0) {
    throw std::invalid_argument("s < 1 with T > 0: infrared-divergent Re g");
  }
  const double upper = spec.cutoff_upper();
  numerics::QuadratureOptions opts;
  opts.initial_panels = oscillation_panels(tau, upper);
  const double re = numerics::integrate(
      [&](double w) {
        const double c = temperature > 0.0 ? coth(w / (2.0 * temperature)) : 1.0;
        return spec.j_natural(w) * c * std::cos(w * tau);
      },
      0.0, upper, opts);
  const double im = -numerics::integrate(
      [&](double w) { return spec.j_natural(w) * std::sin(w * tau); }, 0.0, upper, opts);
  return {re, im};
}

double kernel_G(double t, double omega_0n, const BathSpec& spec, double temperature) {
  if (t < 0.0) throw std::invalid_argument("kernel_G needs t >= 0");
  if (t == 0.0) return 0.0;
  const double upper = spec.cutoff_upper();
  numerics::QuadratureOptions opts;
  opts.initial_panels = oscillation_panels(t, upper);
  // int_0^t cos(w tau) cos(w0 tau) = (A+ + A-)/2, int sin sin = (A- - A+)/2
  // with A+- = sin((w +- w0) t)/(w +- w0).
  auto sinc_t = [t](double freq) {
    if (std::abs(freq * t) < 1e-8) return t * (1.0 - freq * freq * t * t / 6.0);
    return std::sin(freq * t) / freq;
  };
  return numerics::integrate(
      [&](double w) {
        const double c = temperature > 0.0 ? coth(w / (2.0 * temperature)) : 1.0;
        const double ap = sinc_t(w + omega_0n);
        const double am = sinc_t(w - omega_0n);
        return spec.j_natural(w) * (c * 0.5 * (ap + am) - 0.5 * (am - ap));
      },
      0.0, upper, opts);
}

double kernel_G_infinity(double omega_0n, const BathSpec& spec, double temperature) {
  const double aw = std::abs(omega_0n);
  if (aw == 0.0) {
    // limit of (pi/2) J(w) coth(w/2T) as w -> 0
    if (temperature <= 0.0 || spec.s > 1.0) return 0.0;
    if (spec.s == 1.0) return kPi * temperature * spec.k_natural();
    throw std::invalid_argument("s < 1 dephasing plateau diverges");
  }
  const double c = temperature > 0.0 ? coth(aw / (2.0 * temperature)) : 1.0;
  const double sgn = omega_0n > 0.0 ? 1.0 : -1.0;
  return 0.5 * kPi * spec.j_natural(aw) * (c - sgn);
}

double golden_rule_rate(double omega_0n, const BathSpec& spec, double temperature) {
  if (omega_0n == 0.0) {
    throw std::invalid_argument("degenerate channel: use the pure-dephasing kernel");
  }
  const double aw = std::abs(omega_0n);
  const double c = temperature > 0.0 ? coth(aw / (2.0 * temperature)) : 1.0;
  const double sgn = omega_0n > 0.0 ? 1.0 : -1.0;
  return spec.j_natural(aw) * (c - sgn);
}

double dephasing_weight(double omega, const BathSpec& spec, double temperature) {
  if (omega < 0.0) throw std::invalid_argument("dephasing_weight needs omega >= 0");
  if (spec.s < 1.0 && temperature > 0.0) {
    throw std::invalid_argument("s < 1 with T > 0: infrared-divergent dephasing weight");
  }
  if (omega == 0.0) {
    if (temperature <= 0.0) return 0.0;          // J/w -> 0 for s > 1; s = 1 handled below
    if (spec.s == 1.0) return 2.0 * temperature * spec.k_natural();
    return 0.0;
  }
  const double c = temperature > 0.0 ? coth(omega / (2.0 * temperature)) : 1.0;
  return spec.j_natural(omega) / omega * c;
}

double composite_K(const PhysicalParams& params, const BathSpec& spec, double temperature) {
  const double eps = params.epsilon(), om = params.omega();
  double total = 0.0;
  for (double lambda : {params.lambda_plus(), params.lambda_minus()}) {
    const double w0n = eps - lambda;
    if (w0n == 0.0) continue;
    const double weight = 1.0 / std::sqrt(1.0 + ((lambda - eps) / om) * ((lambda - eps) / om));
    total += golden_rule_rate(w0n, spec, temperature) * weight;
  }
  return total;
}

RateTable make_rate_table(const PhysicalParams& params, const BathSpec& spec,
                          double temperature) {
  RateTable table;
  table.omega_01 = params.epsilon() - params.lambda_plus();
  table.omega_02 = params.epsilon() - params.lambda_minus();
  table.gamma_01 = golden_rule_rate(table.omega_01, spec, temperature);
  table.gamma_02 = golden_rule_rate(table.omega_02, spec, temperature);
  table.K = composite_K(params, spec, temperature);
  return table;
}

}  // namespace loopgate
