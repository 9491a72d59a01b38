#include <doctest.h>

#include <cmath>
#include <numbers>

#include "loopgate/dynamics.hpp"
#include "loopgate/numerics.hpp"
#include "loopgate/units.hpp"

using namespace loopgate;

namespace {
constexpr double kPi = std::numbers::pi;

PhysicalParams natural_params(double eps, double om) {
  PhysicalParams p;
  p.epsilon_mev = eps * units::hbar_mev_ps;
  p.omega_mev = om * units::hbar_mev_ps;
  p.v_max = 0.01;
  return p;
}
}  // namespace

TEST_CASE("rabi vector") {
  auto at_pole = rabi_vector(0.0, 1.23, 5.0);
  CHECK(at_pole[0] == doctest::Approx(0.0));
  CHECK(at_pole[1] == doctest::Approx(0.0));
  CHECK(at_pole[2] == doctest::Approx(5.0));
  auto equator = rabi_vector(kPi / 2, 0.0, 5.0);
  CHECK(equator[0] == doctest::Approx(5.0));
  CHECK(std::abs(equator[2]) < 1e-15);
  numerics::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    auto v = rabi_vector(rng.uniform(0, kPi), rng.uniform(0, 2 * kPi), 3.7);
    CHECK(std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) == doctest::Approx(3.7));
  }
}

TEST_CASE("hamiltonian eigensystem") {
  SUBCASE("eps=2 Omega=1: lambda = 1 +- sqrt(2)") {
    const auto p = natural_params(2.0, 1.0);
    const auto sys = eigensystem(0.3, 0.9, p);
    CHECK(sys.lambda_plus == doctest::Approx(2.41421356).epsilon(1e-8));
    CHECK(sys.lambda_minus == doctest::Approx(-0.41421356).epsilon(1e-7));
  }
  SUBCASE("decoupled limit") {
    const auto p = natural_params(1.0, 1e-9);
    const auto sys = eigensystem(0.5, 0.5, p);
    CHECK(sys.lambda_plus == doctest::Approx(1.0));
    CHECK(std::abs(sys.lambda_minus) < 1e-8);
  }
  SUBCASE("residuals and closed-form energies on random parameters") {
    numerics::Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
      const auto p = natural_params(rng.uniform(0.5, 50.0), rng.uniform(0.1, 10.0));
      const double theta = rng.uniform(0, kPi), phi = rng.uniform(0, 2 * kPi);
      const Matrix4cd h = build_hamiltonian(theta, phi, p);
      CHECK((h - h.adjoint()).norm() < 1e-14 * h.norm());
      const auto sys = eigensystem(theta, phi, p);
      const double e = p.epsilon(), o = p.omega();
      const double lp = 0.5 * (e + std::sqrt(e * e + 4 * o * o));
      CHECK(sys.lambda_plus == doctest::Approx(lp).epsilon(1e-10));
      for (auto [v, lam] : {std::pair{sys.bright_plus, sys.lambda_plus},
                            {sys.bright_minus, sys.lambda_minus},
                            {sys.dark1, e},
                            {sys.dark2, e}}) {
        CHECK((h * v - lam * v).norm() < 1e-10 * h.norm());
      }
      // orthonormal frame
      Matrix4cd frame;
      frame.col(0) = sys.bright_plus;
      frame.col(1) = sys.bright_minus;
      frame.col(2) = sys.dark1;
      frame.col(3) = sys.dark2;
      CHECK((frame.adjoint() * frame - Matrix4cd::Identity()).norm() < 1e-12);
      CHECK(std::abs(sys.dark1(0)) < 1e-10);
      CHECK(std::abs(sys.dark2(0)) < 1e-10);
    }
  }
}

TEST_CASE("dark frame") {
  SUBCASE("pole convention") {
    const auto d = dark_frame(0.0, 0.0);
    CHECK(std::abs(d[0](1) - 1.0) < 1e-15);   // D1 = |+>
    CHECK(std::abs(d[1](2) + 1.0) < 1e-15);   // D2 = -|->
  }
  SUBCASE("no |G> component, orthogonal to the driven direction") {
    numerics::Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      const double theta = rng.uniform(0, kPi), phi = rng.uniform(0, 2 * kPi);
      const auto d = dark_frame(theta, phi);
      const auto p = natural_params(4.0, 1.5);
      const Matrix4cd h = build_hamiltonian(theta, phi, p);
      for (const auto& v : d) {
        CHECK(std::abs(v(0)) == 0.0);
        CHECK((h * v - p.epsilon() * v).norm() < 1e-12 * h.norm());
      }
      CHECK(std::abs(d[0].dot(d[1])) < 1e-14);
    }
  }
  SUBCASE("finite-difference connection equals i sigma_y cos(theta) phi_dot") {
    // along a parallel at theta0: d/dt = phi_dot d/dphi
    const double theta0 = 0.9, phi_dot = 0.37, h = 1e-6;
    for (double phi : {0.1, 1.4, 3.9}) {
      const auto dm = dark_frame(theta0, phi - h);
      const auto dp = dark_frame(theta0, phi + h);
      const auto d0 = dark_frame(theta0, phi);
      Eigen::Matrix2cd v;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          v(i, j) = d0[i].dot((dp[j] - dm[j]) / (2.0 * h)) * phi_dot;
        }
      }
      // i sigma_y = [[0, 1], [-1, 0]]
      const double expect = std::cos(theta0) * phi_dot;
      CHECK(std::abs(v(0, 1) - expect) < 1e-6);
      CHECK(std::abs(v(1, 0) + expect) < 1e-6);
      CHECK(std::abs(v(0, 0)) < 1e-6);
      CHECK(std::abs(v(1, 1)) < 1e-6);
    }
  }
}

TEST_CASE("holonomy closed form") {
  const auto id = holonomy_closed_form(0.0);
  CHECK((id.u - Eigen::Matrix2cd::Identity()).norm() < 1e-15);
  // a = pi/2 -> -i sigma_y = [[0, -1], [1, 0]]
  const auto quarter = holonomy_closed_form(kPi / 2);
  CHECK(std::abs(quarter.u(0, 0)) < 1e-15);
  CHECK(std::abs(quarter.u(0, 1) + 1.0) < 1e-15);
  CHECK(std::abs(quarter.u(1, 0) - 1.0) < 1e-15);
  // a = pi/4: equal-weight mixing
  const auto eighth = holonomy_closed_form(kPi / 4);
  CHECK(std::abs(eighth.u(0, 0) - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(std::abs(eighth.u(0, 1)) - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(eighth.u.determinant() - 1.0) < 1e-15);
}

TEST_CASE("numeric holonomy") {
  SUBCASE("meridian-only out-and-back is the identity") {
    std::vector<Segment> segs = {{SegmentKind::kMeridian, 0.0, 0.0, 1.0, 0.2},
                                 {SegmentKind::kMeridian, 1.0, 0.0, -1.0, 0.2}};
    const LoopPath path(segs);
    const auto u = holonomy_numeric(path, 2000);
    CHECK((u.u - Eigen::Matrix2cd::Identity()).norm() < 1e-12);
  }
  SUBCASE("C1 loop against the closed form") {
    // theta_m = pi/3, delta_phi = pi: raw angle = pi cos(pi/3) = pi/2
    const C1Loop loop{kPi / 3, kPi, 0.2};
    const auto path = loop.to_path();
    const auto u = holonomy_numeric(path, 100000);
    const auto ref = holonomy_closed_form(kPi / 2);
    CHECK((u.u - ref.u).norm() < 1e-8);
    CHECK((u.u.adjoint() * u.u - Eigen::Matrix2cd::Identity()).norm() < 1e-10);
  }
  SUBCASE("second-order convergence to the closed form") {
    const C1Loop loop{1.1, 2.7, 0.3};
    const auto path = loop.to_path();
    const double exact_angle = 2.7 * std::cos(1.1);
    const auto ref = holonomy_closed_form(exact_angle);
    const double e1 = (holonomy_numeric(path, 400).u - ref.u).norm();
    const double e2 = (holonomy_numeric(path, 800).u - ref.u).norm();
    CHECK(e2 < e1 / 3.0 + 1e-14);
  }
  SUBCASE("non-closed path is rejected") {
    std::vector<Segment> segs = {{SegmentKind::kMeridian, 0.0, 0.0, 1.0, 0.2}};
    CHECK_THROWS_AS(holonomy_numeric(LoopPath(segs), 100), std::invalid_argument);
  }
}
