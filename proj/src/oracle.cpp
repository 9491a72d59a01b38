#include "loopgate/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "loopgate/dynamics.hpp"

namespace loopgate {

namespace {

constexpr double kPi = std::numbers::pi;
using std::complex;
using Matrix4cd = Eigen::Matrix4cd;
using Vector4cd = Eigen::Vector4cd;

// Cumulative memory integrals W(dE, t) = int_0^min(t, tau_max) conj(g(tau))
// exp(-i dE tau) dtau for all level-pair detunings. Each linear-in-g segment
// is integrated against the oscillation exactly (Filon), so the fast
// bright-dark detunings do not alias on the g grid.
class MemoryKernel {
 public:
  MemoryKernel(const BathSpec& spec, double temperature, double t_ad,
               const std::array<double, 4>& energies) {
    tau_max_ = std::min(20.0 / spec.omega_c(), t_ad);
    const int n_per_memory = 64;
    n_ = static_cast<int>(tau_max_ * spec.omega_c() * n_per_memory) + 2;
    dtau_ = tau_max_ / (n_ - 1);
    std::vector<complex<double>> g(n_);
    for (int i = 0; i < n_; ++i) {
      g[i] = std::conj(correlation(dtau_ * i, spec, temperature));
    }
    for (int m = 0; m < 4; ++m) {
      for (int nn = 0; nn < 4; ++nn) {
        auto& pref = prefix_[m][nn];
        pref.resize(n_);
        pref[0] = 0.0;
        const double de = energies[m] - energies[nn];
        for (int i = 0; i + 1 < n_; ++i) {
          pref[i + 1] = pref[i] + filon_segment(g[i], g[i + 1], dtau_ * i, dtau_, de);
        }
      }
    }
  }

  complex<double> w(int m, int nn, double t) const {
    const auto& pref = prefix_[m][nn];
    if (t >= tau_max_) return pref[n_ - 1];
    const double pos = t / dtau_;
    const int idx = std::min(static_cast<int>(pos), n_ - 2);
    const double frac = pos - idx;
    return pref[idx] + frac * (pref[idx + 1] - pref[idx]);
  }

 private:
  // int_a^{a+h} (ga + (gb-ga)(tau-a)/h) exp(-i de tau) dtau
  static complex<double> filon_segment(complex<double> ga, complex<double> gb, double a,
                                       double h, double de) {
    const complex<double> ea = std::exp(complex<double>(0.0, -de * a));
    const double x = de * h;
    if (std::abs(x) < 1e-4) {
      const complex<double> i1{0.0, 1.0};
      const complex<double> c1 = (gb - ga) / h;
      return ea * (ga * h + 0.5 * c1 * h * h -
                   i1 * de * (0.5 * ga * h * h + c1 * h * h * h / 3.0) -
                   de * de * (ga * h * h * h / 6.0 + c1 * h * h * h * h / 8.0));
    }
    const complex<double> eb = std::exp(complex<double>(0.0, -de * (a + h)));
    const complex<double> i_de{0.0, de};
    const complex<double> c1 = (gb - ga) / h;
    const complex<double> int_const = (ea - eb) / i_de;
    const complex<double> int_linear = -h * eb / i_de + int_const / i_de;
    return ga * int_const + c1 * int_linear;
  }

  double tau_max_ = 0.0;
  double dtau_ = 0.0;
  int n_ = 0;
  std::array<std::array<std::vector<complex<double>>, 4>, 4> prefix_;
};

// Transported frame, columns (bright+, bright-, dark1, dark2). Brights are
// the analytic smooth combinations (the eigensolver's arbitrary phases would
// break the time quadrature); darks carry the holonomy rotation.
Matrix4cd transported_frame(const LoopPath& loop, double t, const PhysicalParams& params) {
  const auto pt = loop.at(t);
  const double om = params.omega();
  const double lp = params.lambda_plus(), lm = params.lambda_minus();
  const auto omv = rabi_vector(pt.theta, pt.phi, 1.0);
  Vector4cd unit, g;
  unit << 0.0, omv[0], omv[1], omv[2];
  g << 1.0, 0.0, 0.0, 0.0;
  Matrix4cd v;
  v.col(0) = (om * g + lp * unit) / std::sqrt(om * om + lp * lp);
  v.col(1) = (om * g + lm * unit) / std::sqrt(om * om + lm * lm);
  const auto dark = dark_frame(pt.theta, pt.phi);
  const auto hol = holonomy_closed_form(holonomy_angle(loop, t));
  v.col(2) = hol.u(0, 0) * dark[0] + hol.u(1, 0) * dark[1];
  v.col(3) = hol.u(0, 1) * dark[0] + hol.u(1, 1) * dark[1];
  return v;
}

struct OracleWorkspace {
  std::vector<double> times;
  std::vector<Matrix4cd> a_tilde;
  const MemoryKernel* kernel = nullptr;
};

OracleWorkspace make_workspace(const LoopPath& loop, const Eigen::Matrix4d& noise,
                               const PhysicalParams& params, const MemoryKernel& kernel,
                               int steps) {
  OracleWorkspace ws;
  ws.kernel = &kernel;
  const std::array<double, 4> energies = {params.lambda_plus(), params.lambda_minus(),
                                          params.epsilon(), params.epsilon()};
  const auto samples = loop.discretize(steps);
  ws.times.reserve(samples.size());
  ws.a_tilde.reserve(samples.size());
  const Matrix4cd a_op = noise.cast<complex<double>>();
  for (const auto& pt : samples) {
    const Matrix4cd v = transported_frame(loop, pt.t, params);
    Matrix4cd a_frame = v.adjoint() * a_op * v;
    for (int m = 0; m < 4; ++m) {
      for (int nn = 0; nn < 4; ++nn) {
        a_frame(m, nn) *= std::exp(complex<double>(0.0, (energies[m] - energies[nn]) * pt.t));
      }
    }
    ws.times.push_back(pt.t);
    ws.a_tilde.push_back(a_frame);
  }
  return ws;
}

Matrix4cd integrate_correction(const OracleWorkspace& ws, const Matrix4cd& rho0) {
  Matrix4cd accum = Matrix4cd::Zero();
  Matrix4cd prev = Matrix4cd::Zero();
  for (std::size_t i = 0; i < ws.times.size(); ++i) {
    const double t = ws.times[i];
    const Matrix4cd& at = ws.a_tilde[i];
    Matrix4cd b;
    for (int m = 0; m < 4; ++m) {
      for (int nn = 0; nn < 4; ++nn) {
        b(m, nn) = at(m, nn) * ws.kernel->w(m, nn, t);
      }
    }
    const Matrix4cd x = at * b * rho0 - b * rho0 * at;
    const Matrix4cd integrand = x + x.adjoint();
    if (i > 0) {
      accum += 0.5 * (ws.times[i] - ws.times[i - 1]) * (integrand + prev);
    }
    prev = integrand;
  }
  return -(8.0 / kPi) * accum;
}

void check_step_resolution(const LoopPath& loop, const BathSpec& spec, int steps) {
  if (steps < 2) throw std::invalid_argument("steps must be >= 2");
  const double dt = loop.total_time() / steps;
  if (dt > 0.5 / spec.omega_c()) {
    throw std::invalid_argument("step count too small to resolve the bath memory time");
  }
}

}  // namespace

double DensityMatrix::trace_error() const { return std::abs(rho.trace() - complex<double>(1.0)); }

double DensityMatrix::hermiticity_error() const { return (rho - rho.adjoint()).norm(); }

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix4cd> solver(0.5 * (rho + rho.adjoint()));
  return solver.eigenvalues().minCoeff();
}

DensityMatrix DensityMatrix::pure(const Vector4cd& psi) {
  DensityMatrix out;
  out.rho = psi * psi.adjoint();
  return out;
}

LoopPath StirapSchedule::to_path() const {
  std::vector<Segment> segs;
  segs.push_back({SegmentKind::kMeridian, 0.0, 0.0, kPi, v_eff});
  segs.push_back({SegmentKind::kParallel, kPi, 0.0, kPi, v_eff});  // zero duration at the pole
  segs.push_back({SegmentKind::kMeridian, kPi, kPi, -kPi, v_eff});
  return LoopPath(std::move(segs));
}

StirapSchedule StirapSchedule::for_time(double t_ad, double v_max) {
  if (t_ad <= 0.0) throw std::domain_error("t_ad must be positive");
  StirapSchedule s;
  s.t_ad = t_ad;
  s.v_eff = 2.0 * kPi / t_ad;
  if (s.v_eff > v_max * (1.0 + 1e-12)) {
    throw std::domain_error("t_ad below the pole-to-pole transit at v_max");
  }
  return s;
}

DensityMatrix evolve_second_order(const LoopPath& loop, const Eigen::Matrix4d& noise,
                                  const PhysicalParams& params, const BathSpec& spec,
                                  double temperature, const DensityMatrix& initial,
                                  int steps) {
  if (!loop.closed()) throw std::invalid_argument("oracle requires a closed loop");
  check_step_resolution(loop, spec, steps);
  const std::array<double, 4> energies = {params.lambda_plus(), params.lambda_minus(),
                                          params.epsilon(), params.epsilon()};
  MemoryKernel kernel(spec, temperature, loop.total_time(), energies);
  auto ws = make_workspace(loop, noise, params, kernel, steps);

  const Matrix4cd v0 = transported_frame(loop, 0.0, params);
  const Matrix4cd rho_frame = v0.adjoint() * initial.rho * v0;
  const Matrix4cd delta = integrate_correction(ws, rho_frame);
  DensityMatrix out;
  out.rho = v0 * (rho_frame + delta) * v0.adjoint();
  return out;
}

double average_error_oracle(const LoopPath& loop, const Eigen::Matrix4d& noise,
                            const PhysicalParams& params, const BathSpec& spec,
                            double temperature, int steps) {
  if (!loop.closed()) throw std::invalid_argument("oracle requires a closed loop");
  check_step_resolution(loop, spec, steps);
  const std::array<double, 4> energies = {params.lambda_plus(), params.lambda_minus(),
                                          params.epsilon(), params.epsilon()};
  MemoryKernel kernel(spec, temperature, loop.total_time(), energies);
  auto ws = make_workspace(loop, noise, params, kernel, steps);

  const Matrix4cd v0 = transported_frame(loop, 0.0, params);
  const complex<double> i1{0.0, 1.0};
  const double r = 1.0 / std::sqrt(2.0);
  Vector4cd plus, minus;
  plus << 0.0, 1.0, 0.0, 0.0;
  minus << 0.0, 0.0, 1.0, 0.0;
  const std::array<Vector4cd, 6> design = {plus,
                                           minus,
                                           r * (plus + minus),
                                           r * (plus - minus),
                                           r * (plus + i1 * minus),
                                           r * (plus - i1 * minus)};
  double total = 0.0;
  for (const auto& psi : design) {
    const Vector4cd psi_frame = v0.adjoint() * psi;
    const Matrix4cd rho_frame = psi_frame * psi_frame.adjoint();
    const Matrix4cd delta = integrate_correction(ws, rho_frame);
    total += -std::real(psi_frame.dot(delta * psi_frame));
  }
  return total / 6.0;
}

double stirap_error(const GateSpec& gate, const PhysicalParams& params, const BathSpec& spec,
                    double temperature, double t_ad) {
  (void)gate;  // the pole-to-pole schedule is gate-independent
  const auto schedule = StirapSchedule::for_time(t_ad, params.v_max);
  const double K = composite_K(params, spec, temperature);
  // K/v * (theta - sin(4 theta)/4) at theta = pi covers both meridian legs
  return (K / schedule.v_eff) * kPi;
}

}  // namespace loopgate
