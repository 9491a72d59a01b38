#include <doctest.h>

#include <cmath>
#include <numbers>

#include "loopgate/loop.hpp"
#include "loopgate/numerics.hpp"

using namespace loopgate;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("solid angle of C1 loops") {
  CHECK(solid_angle({kPi / 2, kPi / 2, 1.0}) == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(solid_angle({kPi, kPi / 4, 1.0}) == doctest::Approx(kPi / 2).epsilon(1e-14));
  // construction identity: delta_phi = a/(1-cos theta) at small theta
  for (double a : {0.3, 1.0, kPi}) {
    const double theta = 1e-3;
    const C1Loop loop{theta, a / (1.0 - std::cos(theta)), 0.1};
    CHECK(solid_angle(loop) == doctest::Approx(a).epsilon(1e-10));
  }
}

TEST_CASE("holonomy angle rate") {
  const C1Loop loop{kPi / 3, kPi, 0.1};
  const auto path = loop.to_path();
  const double t1 = (kPi / 3) / 0.1;
  // meridians: phi_dot = 0
  CHECK(holonomy_angle_rate(path, 0.5 * t1) == 0.0);
  // parallel at theta = pi/3: phi_dot = v/sin, rate = v cot(theta)... times cos
  const double rate = holonomy_angle_rate(path, t1 + 1.0);
  CHECK(rate == doctest::Approx(0.1 / std::sin(kPi / 3) * 0.5).epsilon(1e-12));
  CHECK(rate == doctest::Approx(0.05774).epsilon(1e-3));
  // parallel at the equator has zero rate
  const C1Loop eq{kPi / 2, kPi, 0.1};
  CHECK(holonomy_angle_rate(eq.to_path(), (kPi / 2) / 0.1 + 0.5) == doctest::Approx(0.0));
  CHECK_THROWS_AS(holonomy_angle_rate(path, path.total_time() + 1.0), std::out_of_range);
}

TEST_CASE("theta_m_for_time") {
  // v t = a puts the loop on the equator
  CHECK(theta_m_for_time(0.7, 1.0, 0.7) == doctest::Approx(kPi / 2).epsilon(1e-12));
  // long times collapse toward the pole
  CHECK(theta_m_for_time(kPi / 2, 1.0, 1e5) < 1e-4);
  // a = pi/2, v t = 25: first-order estimate 2a/(vt) = 0.125664, exact below it
  const double theta = theta_m_for_time(kPi / 2, 1.0, 25.0);
  CHECK(theta == doctest::Approx(2.0 * (kPi / 2) / 25.0).epsilon(2e-2));
  CHECK(theta == doctest::Approx(0.1254961).epsilon(1e-4));
  CHECK_THROWS_AS(theta_m_for_time(-1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("total time") {
  CHECK(total_time({kPi / 2, 2.0 * kPi, 1.0}) == doctest::Approx(3.0 * kPi).epsilon(1e-14));
  // theta -> 0: time is dominated by the winding, delta_phi*theta/v
  const double theta = 1e-4;
  const C1Loop tiny{theta, 5.0, 2.0};
  CHECK(total_time(tiny) == doctest::Approx((2.0 * theta + 5.0 * theta) / 2.0).epsilon(1e-6));
}

TEST_CASE("time map inverts total_time up to the meridian travel term") {
  // (v T)^2 - (v T_map)^2 = 4 theta (theta + dphi sin theta) exactly, so the
  // recovered angle obeys a quantified bound rather than a strict identity.
  numerics::Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const double theta = rng.uniform(0.05, kPi - 0.2);
    const double a = rng.uniform(0.2, 4.0);
    const double v = rng.uniform(0.05, 2.0);
    const C1Loop loop{theta, a / (1.0 - std::cos(theta)), v};
    const double t_exact = total_time(loop);
    const double theta_back = theta_m_for_time(a, v, t_exact);
    const double omc = 1.0 - std::cos(theta);
    const double excess = 4.0 * theta * (theta + loop.delta_phi * std::sin(theta));
    const double bound = omc * excess / (2.0 * a * loop.delta_phi);
    CHECK(std::abs((1.0 - std::cos(theta_back)) - omc) <= bound * 1.0001 + 1e-12);
  }
  // multi-winding limit: the discrepancy vanishes
  const double theta = 0.4, a = 200.0;
  const C1Loop big{theta, a / (1.0 - std::cos(theta)), 0.3};
  const double theta_back = theta_m_for_time(a, 0.3, total_time(big));
  CHECK(theta_back == doctest::Approx(theta).epsilon(2e-3));
}

TEST_CASE("total_time strictly increasing in delta_phi") {
  double prev = 0.0;
  for (double dphi : {0.1, 0.5, 2.0, 9.0}) {
    const double t = total_time({1.0, dphi, 0.7});
    CHECK(t > prev);
    prev = t;
  }
}

TEST_CASE("theta_m_for_time decreasing in t_ad beyond the equator point") {
  const double a = kPi / 2, v = 0.3;
  double prev = kPi;
  for (double t = a / v; t < 40.0 * a / v; t *= 1.17) {
    const double theta = theta_m_for_time(a, v, t);
    CHECK(theta <= prev + 1e-12);
    prev = theta;
  }
}

TEST_CASE("discretize") {
  const C1Loop loop{kPi / 3, 2.0, 0.25};
  const auto path = loop.to_path();
  SUBCASE("two steps give the endpoints plus segment boundaries") {
    const auto pts = path.discretize(2);
    CHECK(pts.front().t == 0.0);
    CHECK(pts.back().t == doctest::Approx(path.total_time()));
    // boundaries inserted
    const double t1 = (kPi / 3) / 0.25;
    bool has_boundary = false;
    for (const auto& p : pts) has_boundary |= std::abs(p.t - t1) < 1e-9;
    CHECK(has_boundary);
  }
  SUBCASE("endpoints map to the pole") {
    const auto pts = path.discretize(64);
    CHECK(pts.front().theta == doctest::Approx(0.0));
    CHECK(pts.back().theta == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("holonomy-rate quadrature converges to delta_phi cos(theta) at order >= 2") {
    const double exact = loop.delta_phi * std::cos(loop.theta_m);
    auto integral = [&](int n) {
      const auto pts = path.discretize(n);
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double tm = 0.5 * (pts[i].t + pts[i + 1].t);
        acc += holonomy_angle_rate(path, tm) * (pts[i + 1].t - pts[i].t);
      }
      return acc;
    };
    const double err1 = std::abs(integral(200) - exact);
    const double err2 = std::abs(integral(400) - exact);
    // midpoint rule on a piecewise-smooth path: order 2 up to roundoff
    CHECK(err2 <= err1 / 3.0 + 1e-13);
  }
}

TEST_CASE("raw holonomy angle against the solid angle") {
  // the literal identities: integral of phi_dot cos theta = delta_phi cos(theta_m),
  // solid angle = delta_phi (1 - cos theta_m); the two differ by delta_phi.
  const C1Loop loop{1.1, 3.3, 0.4};
  const auto path = loop.to_path();
  const double raw = holonomy_angle(path, path.total_time());
  CHECK(raw == doctest::Approx(3.3 * std::cos(1.1)).epsilon(1e-9));
  CHECK(solid_angle(loop) == doctest::Approx(3.3 * (1.0 - std::cos(1.1))).epsilon(1e-9));
  CHECK(raw + solid_angle(loop) == doctest::Approx(3.3).epsilon(1e-9));
}

TEST_CASE("Cn staircase closes and accumulates solid angle") {
  const CnLoop c2{{0.5, 1.2}, {1.0, 2.0}, 0.3};
  const auto path = c2.to_path();
  CHECK(path.closed());
  CHECK(c2.solid_angle() ==
        doctest::Approx(1.0 * (1 - std::cos(0.5)) + 2.0 * (1 - std::cos(1.2))));
  // n = 1 reduces to the C1 loop
  const CnLoop c1{{0.8}, {2.5}, 0.3};
  const C1Loop ref{0.8, 2.5, 0.3};
  CHECK(c1.to_path().total_time() == doctest::Approx(total_time(ref)));
}

TEST_CASE("loop serialization round trip") {
  const C1Loop loop{0.77, 5.5, 0.31};
  const auto loop2 = C1Loop::from_kv(loop.to_kv());
  CHECK(loop2.theta_m == loop.theta_m);
  CHECK(loop2.delta_phi == loop.delta_phi);
  CHECK(loop2.speed == loop.speed);
}
