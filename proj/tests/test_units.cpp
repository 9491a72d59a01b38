#include <doctest.h>

#include <cmath>

#include "loopgate/params.hpp"
#include "loopgate/units.hpp"

using namespace loopgate;

TEST_CASE("energy/frequency conversion") {
  CHECK(units::to_angular_frequency(0.0) == 0.0);
  // 0.4 / 0.6582119569 and 20 / 0.6582119569, frozen to 4 s.f.
  CHECK(units::to_angular_frequency(0.4) == doctest::Approx(0.6077).epsilon(1e-4));
  CHECK(units::to_angular_frequency(20.0) == doctest::Approx(30.39).epsilon(1e-4));
}

TEST_CASE("round trips are identity to 1e-12") {
  for (double e : {1e-6, 0.01, 0.5, 1.0, 20.0, 1000.0}) {
    const double back = units::to_energy(units::to_angular_frequency(e));
    CHECK(std::abs(back - e) <= 1e-12 * e);
  }
  for (double w : {1e-3, 0.1, 1.0, 1519.8}) {
    const double back = units::to_angular_frequency(units::to_energy(w));
    CHECK(std::abs(back - w) <= 1e-12 * w);
  }
}

TEST_CASE("validate accepts the reference parameter set") {
  PhysicalParams p;
  p.epsilon_mev = 20.0;
  p.omega_mev = 20.0;
  p.v_max = p.omega() / 50.0;
  p.temperature_mev = 0.0;
  CHECK(validate(p).empty());
  // Omega = 20 meV at Omega/50 gives 0.6077 rad/ps
  CHECK(p.v_max == doctest::Approx(0.6077).epsilon(1e-4));
}

TEST_CASE("adiabaticity cap violation warns, degenerate input throws") {
  PhysicalParams p;
  p.epsilon_mev = 20.0;
  p.omega_mev = 20.0;
  p.v_max = p.omega();  // cap violated
  const auto warnings = validate(p);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("adiabaticity") != std::string::npos);

  p.omega_mev = 0.0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
}

TEST_CASE("gate presets") {
  CHECK(GateSpec::not_gate().solid_angle == doctest::Approx(1.5707963267948966));
  CHECK(GateSpec::hadamard_gate().solid_angle == doctest::Approx(0.7853981633974483));
  CHECK_THROWS_AS(validate_or_throw(GateSpec::custom(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(validate_or_throw(GateSpec::custom(13.0)), std::invalid_argument);
}

TEST_CASE("bright-state energies, eps=2 Omega=1 in natural units") {
  PhysicalParams p;
  p.epsilon_mev = 2.0 * units::hbar_mev_ps;
  p.omega_mev = 1.0 * units::hbar_mev_ps;
  p.v_max = 0.01;
  CHECK(p.lambda_plus() == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK(p.lambda_minus() == doctest::Approx(1.0 - std::sqrt(2.0)).epsilon(1e-12));
}
