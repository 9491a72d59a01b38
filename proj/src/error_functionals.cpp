#include "loopgate/error_functionals.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "loopgate/dynamics.hpp"
#include "loopgate/numerics.hpp"

namespace loopgate {

namespace {

constexpr double kPi = std::numbers::pi;

// weight(t) = sum_i amp_i cos(alpha_i t + phi_i) over [ta, tb]
struct CosTerm {
  double amp, alpha, phi;
};

struct Window {
  double ta, tb;
  std::vector<CosTerm> terms;
};

double time_integral(double w, const std::vector<Window>& windows) {
  double total = 0.0;
  for (const auto& win : windows) {
    for (const auto& term : win.terms) {
      total += term.amp * numerics::sin_times_cos_integral(w, term.alpha, term.phi, win.ta, win.tb);
    }
  }
  return total;
}

// sin^4(beta - v t) = 3/8 - cos(2vt - 2beta)/2 + cos(4vt - 4beta)/8
std::vector<CosTerm> sin4_terms(double v, double beta, double scale) {
  return {{scale * 3.0 / 8.0, 0.0, 0.0},
          {-scale * 0.5, 2.0 * v, -2.0 * beta},
          {scale * 0.125, 4.0 * v, -4.0 * beta}};
}

struct C1Times {
  double t1, t2, t_ad, adot, q_final, s4;
};

C1Times c1_times(const C1Loop& loop) {
  C1Times out{};
  const double st = std::sin(loop.theta_m);
  out.t1 = loop.theta_m / loop.speed;
  const double tp = loop.delta_phi * st / loop.speed;
  out.t2 = out.t1 + tp;
  out.t_ad = out.t2 + out.t1;
  out.adot = st > 1e-300 ? loop.speed * std::cos(loop.theta_m) / st : 0.0;
  const double a_raw = loop.delta_phi * std::cos(loop.theta_m);
  out.q_final = 1.0 + 0.5 * std::sin(2.0 * a_raw) * std::sin(2.0 * a_raw);
  out.s4 = st * st * st * st;
  return out;
}

// Q[a0 + adot (t - tref)] sin^4(theta) = s4 (5/4 - cos(4 adot t + phase)/4)
std::vector<CosTerm> parallel_terms(const C1Times& c, double t_ref, double scale) {
  return {{scale * c.s4 * 1.25, 0.0, 0.0},
          {-scale * c.s4 * 0.25, 4.0 * c.adot, -4.0 * c.adot * t_ref}};
}

double pd_quadrature(const std::vector<Window>& windows, const BathSpec& spec,
                     double temperature, double t_span) {
  const double upper = spec.cutoff_upper();
  numerics::QuadratureOptions opts;
  opts.rel_tol = 1e-10;
  const double cycles = t_span * upper / (2.0 * kPi);
  opts.initial_panels = std::min(static_cast<int>(cycles * 4.0) + 8, 40000);
  const double value = numerics::integrate(
      [&](double w) { return dephasing_weight(w, spec, temperature) * time_integral(w, windows); },
      0.0, upper, opts);
  return (kPi / 8.0) * value;
}

}  // namespace

Eigen::Matrix4d noise_operator(NoiseKind kind) {
  Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
  switch (kind) {
    case NoiseKind::kDephase0:
      a(3, 3) = 1.0;
      break;
    case NoiseKind::kSplitPm:
      a(1, 1) = 1.0;
      a(3, 3) = -1.0;
      break;
  }
  return a;
}

double delta_tr_meridian(double theta_m, double v, double K) {
  if (theta_m < 0.0 || theta_m > kPi) throw std::invalid_argument("theta_m outside [0, pi]");
  if (v <= 0.0) throw std::invalid_argument("speed must be positive");
  return (K / v) * (theta_m - 0.25 * std::sin(4.0 * theta_m));
}

double delta_tr_parallel(double theta_m, double a, double v, double K) {
  if (v <= 0.0) throw std::invalid_argument("speed must be positive");
  if (a < 0.0) throw std::invalid_argument("solid angle must be >= 0");
  if (theta_m <= 0.0) {
    if (a == 0.0) return 0.0;
    throw std::invalid_argument("theta_m = 0 with a > 0 needs infinite winding");
  }
  if (theta_m > kPi) throw std::invalid_argument("theta_m outside (0, pi]");
  const double s = std::sin(theta_m), s2 = std::sin(2.0 * theta_m);
  return K * (a / v) * s * s2 * s2 / (1.0 - std::cos(theta_m));
}

ErrorBreakdown delta_tr_c1(const C1Loop& loop, const GateSpec& gate, double K) {
  if (std::abs(solid_angle(loop) - gate.solid_angle) > 1e-9) {
    throw std::invalid_argument("loop solid angle does not realize the gate");
  }
  ErrorBreakdown out;
  out.tr_meridian = delta_tr_meridian(loop.theta_m, loop.speed, K);
  out.tr_parallel = delta_tr_parallel(loop.theta_m, gate.solid_angle, loop.speed, K);
  return out;
}

double delta_pd_parallel(const C1Loop& loop, const BathSpec& spec, double temperature,
                         PdWindow window) {
  const C1Times c = c1_times(loop);
  if (loop.delta_phi == 0.0) return 0.0;
  std::vector<Window> windows;
  switch (window) {
    case PdWindow::kLoopTime:
      windows.push_back({c.t1, c.t2, parallel_terms(c, c.t1, 1.0)});
      break;
    case PdWindow::kSegmentRestart:
      windows.push_back({0.0, c.t2 - c.t1, parallel_terms(c, 0.0, 1.0)});
      break;
    case PdWindow::kLiteralEq26:
      // constant sin^4(theta_m) weight before and after the arc as printed
      windows.push_back({0.0, c.t1, {{c.s4, 0.0, 0.0}}});
      windows.push_back({c.t1, c.t2, parallel_terms(c, c.t1, 1.0)});
      windows.push_back({c.t2, c.t_ad, {{c.s4 * c.q_final, 0.0, 0.0}}});
      break;
  }
  return pd_quadrature(windows, spec, temperature, c.t_ad);
}

double delta_pd_meridian(const C1Loop& loop, const BathSpec& spec, double temperature,
                         PdWindow window) {
  const C1Times c = c1_times(loop);
  std::vector<Window> windows;
  if (window == PdWindow::kSegmentRestart) {
    // both legs folded onto [0, theta_m/v], kernel clock restarted
    Window w{0.0, c.t1, sin4_terms(-loop.speed, 0.0, 1.0)};
    auto desc = sin4_terms(loop.speed, loop.theta_m, c.q_final);
    w.terms.insert(w.terms.end(), desc.begin(), desc.end());
    windows.push_back(w);
  } else {
    // ascending: theta = v t; descending: theta = (theta_m + v t2) - v t
    windows.push_back({0.0, c.t1, sin4_terms(-loop.speed, 0.0, 1.0)});
    windows.push_back(
        {c.t2, c.t_ad, sin4_terms(loop.speed, loop.theta_m + loop.speed * c.t2, c.q_final)});
  }
  return pd_quadrature(windows, spec, temperature, c.t_ad);
}

ErrorBreakdown delta_breakdown(const C1Loop& loop, const GateSpec& gate,
                               const PhysicalParams& params, const BathSpec& spec,
                               double temperature) {
  const double K = composite_K(params, spec, temperature);
  ErrorBreakdown out = delta_tr_c1(loop, gate, K);
  out.pd_parallel = delta_pd_parallel(loop, spec, temperature);
  out.pd_meridian = delta_pd_meridian(loop, spec, temperature);
  return out;
}

double delta_general(const LoopPath& loop, const Eigen::Matrix4d& noise,
                     const PhysicalParams& params, const BathSpec& spec, double temperature,
                     int n_steps, bool plateau_transitions) {
  using Eigen::Vector2cd;
  using std::complex;
  if (!loop.closed()) throw std::invalid_argument("delta_general requires a closed loop");
  const auto samples = loop.discretize(n_steps);
  const Eigen::Matrix4cd a_op = noise.cast<complex<double>>();

  const double w01 = params.epsilon() - params.lambda_plus();
  const double w02 = params.epsilon() - params.lambda_minus();

  // logical 2-design at theta(0) = 0: |+>, |->, and the four balanced mixes;
  // coefficients in the (D1, D2) frame where |+> = D1, |-> = -D2 at phi = 0.
  const complex<double> i1{0.0, 1.0};
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<Vector2cd, 6> design = {
      Vector2cd(1, 0),        Vector2cd(0, -1),          Vector2cd(r, -r),
      Vector2cd(r, r),        Vector2cd(r, -r * i1),     Vector2cd(r, r * i1)};

  std::array<double, 6> accum{};
  std::vector<double> g01(samples.size()), g02(samples.size()), gpd(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double t = samples[i].t;
    g01[i] = plateau_transitions ? kernel_G_infinity(w01, spec, temperature)
                                 : kernel_G(t, w01, spec, temperature);
    g02[i] = plateau_transitions ? kernel_G_infinity(w02, spec, temperature)
                                 : kernel_G(t, w02, spec, temperature);
    gpd[i] = kernel_G(t, 0.0, spec, temperature);
  }

  std::vector<std::array<double, 6>> integrand(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& pt = samples[i];
    const auto sys = eigensystem(pt.theta, pt.phi, params);
    const auto dark = dark_frame(pt.theta, pt.phi);
    const double a_raw = holonomy_angle(loop, pt.t);
    const auto hol = holonomy_closed_form(a_raw);
    for (int k = 0; k < 6; ++k) {
      const Vector2cd c = hol.u.cast<complex<double>>() * design[k];
      const Vector4cd psi = c(0) * dark[0] + c(1) * dark[1];
      const Vector4cd a_psi = a_op * psi;
      // dark state orthogonal to psi(t)
      const Vector4cd phi_d = -std::conj(c(1)) * dark[0] + std::conj(c(0)) * dark[1];
      const double m_plus = std::norm(sys.bright_plus.dot(a_psi));
      const double m_minus = std::norm(sys.bright_minus.dot(a_psi));
      const double m_dark = std::norm(phi_d.dot(a_psi));
      integrand[i][k] = g01[i] * m_plus + g02[i] * m_minus + gpd[i] * m_dark;
    }
  }
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const double dt = samples[i + 1].t - samples[i].t;
    for (int k = 0; k < 6; ++k) {
      accum[k] += 0.5 * dt * (integrand[i][k] + integrand[i + 1][k]);
    }
  }
  double mean = 0.0;
  for (double v : accum) mean += v / 6.0;
  return (16.0 / kPi) * mean;
}

double delta_tr_general_noise(const LoopPath& loop, const PhysicalParams& params,
                              const BathSpec& spec, double temperature) {
  const double K = composite_K(params, spec, temperature);
  double total = 0.0;
  double t0 = 0.0;
  for (const auto& seg : loop.segments()) {
    const double dur = seg.duration();
    if (dur <= 0.0) continue;
    // resolve sin(2 phi) winding on parallels
    int n = 128;
    if (seg.kind == SegmentKind::kParallel) {
      n = std::max(n, static_cast<int>(std::abs(seg.delta) * 16.0) + 1);
    }
    if (n % 2 == 1) ++n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double frac = static_cast<double>(i) / n;
      double theta = seg.theta0, phi = seg.phi0;
      if (seg.kind == SegmentKind::kMeridian) {
        theta += seg.delta * frac;
      } else {
        phi += seg.delta * frac;
      }
      const double term1 = 0.5 * std::sin(2.0 * theta) * std::cos(2.0 * theta);
      const double term2 = std::sin(theta) * std::sin(2.0 * phi);
      const double f = term1 * term1 + term2 * term2;
      const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      sum += w * f;
    }
    total += sum * dur / (3.0 * n);
    t0 += dur;
  }
  (void)t0;
  return K * total;
}

PowerLawFit fit_powerlaw(const std::vector<double>& t, const std::vector<double>& delta) {
  if (t.size() != delta.size()) throw std::invalid_argument("fit_powerlaw: size mismatch");
  if (t.size() < 5) throw std::invalid_argument("fit_powerlaw needs >= 5 points");
  std::vector<double> lx(t.size()), ly(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] <= 0.0 || delta[i] <= 0.0) {
      throw std::invalid_argument("fit_powerlaw needs positive samples");
    }
    lx[i] = std::log(t[i]);
    ly[i] = std::log(delta[i]);
  }
  const auto fit = numerics::fit_line(lx.data(), ly.data(), static_cast<int>(t.size()));
  return {fit.slope, std::exp(fit.intercept), fit.residual};
}

}  // namespace loopgate
