#include <doctest.h>

#include <cmath>
#include <numbers>

#include "loopgate/bath.hpp"
#include "loopgate/numerics.hpp"
#include "loopgate/units.hpp"

using namespace loopgate;

namespace {
constexpr double kPi = std::numbers::pi;
const BathSpec kDefaultBath{3.0, 1e-2, 0.5};

PhysicalParams ref_params() {
  PhysicalParams p;
  p.epsilon_mev = 1000.0;
  p.omega_mev = 10.0;
  p.v_max = p.omega() / 50.0;
  return p;
}

// bath with k_natural = 1, omega_c = 1 rad/ps
BathSpec natural_unit_bath(double s) {
  BathSpec b;
  b.s = s;
  b.k_mev = std::pow(units::hbar_mev_ps, 1.0 - s);
  b.omega_c_mev = units::hbar_mev_ps;
  return b;
}
}  // namespace

TEST_CASE("spectral density") {
  CHECK(spectral_density(0.0, kDefaultBath) == 0.0);
  // k w^3 exp(-(w/wc)^2) at w = wc = 0.5 meV
  CHECK(spectral_density(0.5, kDefaultBath) == doctest::Approx(4.59849301464e-4).epsilon(1e-10));
  CHECK_THROWS_AS(spectral_density(-1.0, kDefaultBath), std::invalid_argument);
  // maximum at wc sqrt(3/2) for s = 3
  const double wmax = 0.5 * std::sqrt(1.5);
  CHECK(spectral_density(wmax, kDefaultBath) > spectral_density(wmax * 0.98, kDefaultBath));
  CHECK(spectral_density(wmax, kDefaultBath) > spectral_density(wmax * 1.02, kDefaultBath));
}

TEST_CASE("correlation function") {
  SUBCASE("g(0) = 1/2 for the unit super-Ohmic bath") {
    const auto b = natural_unit_bath(3.0);
    const auto g0 = correlation(0.0, b, 0.0);
    CHECK(g0.real() == doctest::Approx(0.5).epsilon(1e-9));  // int w^3 e^{-w^2} = 1/2
    CHECK(g0.imag() == doctest::Approx(0.0));
  }
  SUBCASE("Re even, Im odd") {
    for (double tau : {0.3, 1.7, 6.0}) {
      const auto gp = correlation(tau, kDefaultBath, 0.02);
      const auto gm = correlation(-tau, kDefaultBath, 0.02);
      CHECK(gp.real() == doctest::Approx(gm.real()).epsilon(1e-10));
      CHECK(gp.imag() == doctest::Approx(-gm.imag()).epsilon(1e-10));
    }
  }
  SUBCASE("infrared guard") {
    BathSpec ohmic_sub{0.5, 1e-2, 0.5};
    CHECK_THROWS_AS(correlation(1.0, ohmic_sub, 0.01), std::invalid_argument);
    CHECK_NOTHROW(correlation(1.0, ohmic_sub, 0.0));
  }
}

TEST_CASE("kernel G") {
  const double T = units::to_angular_frequency(0.02);
  SUBCASE("vanishes at t = 0") {
    CHECK(kernel_G(0.0, 0.3, kDefaultBath, T) == 0.0);
  }
  SUBCASE("w0n = 0 reduces to the integrated real part of g") {
    const double t = 4.0;
    const int n = 4000;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double tau = t * i / n;
      const double w = (i == 0 || i == n) ? 0.5 : 1.0;
      acc += w * correlation(tau, kDefaultBath, T).real() * (t / n);
    }
    CHECK(kernel_G(t, 0.0, kDefaultBath, T) == doctest::Approx(acc).epsilon(1e-5));
  }
  SUBCASE("long-time limit matches the stationary form at +-1 meV") {
    for (double sign : {1.0, -1.0}) {
      const double w0 = sign * units::to_angular_frequency(1.0);
      const double ginf = kernel_G_infinity(w0, kDefaultBath, T);
      const double g_late = kernel_G(400.0, w0, kDefaultBath, T);
      CHECK(g_late == doctest::Approx(ginf).epsilon(1e-3));
    }
  }
  SUBCASE("memory-time convergence: within 1% of the plateau beyond 20/w_c") {
    const double w0 = units::to_angular_frequency(1.0);
    const double ginf = kernel_G_infinity(w0, kDefaultBath, T);
    const double t_mem = 20.0 / kDefaultBath.omega_c();
    for (double t : {1.05 * t_mem, 2.0 * t_mem, 5.0 * t_mem}) {
      CHECK(std::abs(kernel_G(t, w0, kDefaultBath, T) - ginf) < 0.01 * ginf);
    }
  }
}

TEST_CASE("golden rule rates") {
  SUBCASE("zero-temperature limits") {
    const double w = units::to_angular_frequency(0.3);
    CHECK(golden_rule_rate(w, kDefaultBath, 0.0) == doctest::Approx(0.0));
    CHECK(golden_rule_rate(-w, kDefaultBath, 0.0) ==
          doctest::Approx(2.0 * kDefaultBath.j_natural(w)).epsilon(1e-14));
    CHECK_THROWS_AS(golden_rule_rate(0.0, kDefaultBath, 0.1), std::invalid_argument);
  }
  SUBCASE("detailed balance to 1e-10") {
    const double T = units::to_angular_frequency(0.05);
    for (double w_mev : {0.05, 0.2, 0.5, 1.0, 2.0}) {
      const double w = units::to_angular_frequency(w_mev);
      const double ratio = golden_rule_rate(w, kDefaultBath, T) /
                           golden_rule_rate(-w, kDefaultBath, T);
      CHECK(std::abs(ratio - std::exp(-w / T)) < 1e-10);
    }
  }
  SUBCASE("non-negative on a grid") {
    const double T = units::to_angular_frequency(0.02);
    for (double w = -3.0; w <= 3.0; w += 0.37) {
      if (w == 0.0) continue;
      CHECK(golden_rule_rate(w, kDefaultBath, T) >= 0.0);
    }
  }
}

TEST_CASE("composite K") {
  SUBCASE("frozen regression at the reference parameters") {
    const auto p = ref_params();
    CHECK(composite_K(p, kDefaultBath, 0.0) ==
          doctest::Approx(2.91839413906e-5).epsilon(1e-9));
    CHECK(composite_K(p, kDefaultBath, units::to_angular_frequency(0.01)) ==
          doctest::Approx(2.91852677252e-5).epsilon(1e-9));
  }
  SUBCASE("T = 0: only the emission channel contributes") {
    auto p = ref_params();
    const auto table = make_rate_table(p, kDefaultBath, 0.0);
    CHECK(table.omega_01 < 0.0);
    CHECK(table.omega_02 > 0.0);
    CHECK(table.gamma_01 > 0.0);
    CHECK(table.gamma_02 == doctest::Approx(0.0));  // J at ~1 eV is cut off
    CHECK(table.K == doctest::Approx(2.91839413906e-5).epsilon(1e-9));
  }
  SUBCASE("K vanishes in the decoupled limit") {
    auto p = ref_params();
    p.omega_mev = 1e-6;
    CHECK(composite_K(p, kDefaultBath, 0.0) < 1e-30);
  }
}

TEST_CASE("dephasing weight") {
  const double T = units::to_angular_frequency(0.01);
  // removable singularity: s = 3 -> 0, s = 1 -> 2 T k
  CHECK(dephasing_weight(0.0, kDefaultBath, T) == 0.0);
  BathSpec ohmic{1.0, 1e-2, 0.5};
  CHECK(dephasing_weight(0.0, ohmic, T) ==
        doctest::Approx(2.0 * T * ohmic.k_natural()).epsilon(1e-12));
  // continuity near zero
  CHECK(dephasing_weight(1e-8, ohmic, T) ==
        doctest::Approx(dephasing_weight(0.0, ohmic, T)).epsilon(1e-5));
}
