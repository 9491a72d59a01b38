#include "loopgate/dynamics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace loopgate {

namespace {
using std::complex;
constexpr complex<double> kI{0.0, 1.0};
}  // namespace

std::array<double, 3> rabi_vector(double theta, double phi, double omega) {
  return {omega * std::sin(theta) * std::cos(phi), omega * std::sin(theta) * std::sin(phi),
          omega * std::cos(theta)};
}

Matrix4cd build_hamiltonian(double theta, double phi, const PhysicalParams& params) {
  const double eps = params.epsilon();
  const auto om = rabi_vector(theta, phi, params.omega());
  Matrix4cd h = Matrix4cd::Zero();
  h(1, 1) = h(2, 2) = h(3, 3) = eps;
  for (int j = 0; j < 3; ++j) {
    h(j + 1, 0) = om[j];
    h(0, j + 1) = om[j];
  }
  return h;
}

EigenSystem eigensystem(double theta, double phi, const PhysicalParams& params) {
  const Matrix4cd h = build_hamiltonian(theta, phi, params);
  Eigen::SelfAdjointEigenSolver<Matrix4cd> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");

  EigenSystem out;
  out.epsilon = params.epsilon();
  out.lambda_plus = params.lambda_plus();
  out.lambda_minus = params.lambda_minus();

  // Brights carry |G> weight; the doubly degenerate eps eigenvectors do not.
  int n_dark = 0;
  for (int i = 0; i < 4; ++i) {
    const Vector4cd v = solver.eigenvectors().col(i);
    const double val = solver.eigenvalues()(i);
    if (std::abs(v(0)) < 1e-8) {
      (n_dark++ == 0 ? out.dark1 : out.dark2) = v;
    } else if (val > out.epsilon) {
      out.bright_plus = v;
    } else {
      out.bright_minus = v;
    }
  }
  if (n_dark != 2) throw std::runtime_error("dark-space identification failed");
  return out;
}

std::array<Vector4cd, 2> dark_frame(double theta, double phi) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  Vector4cd d1, d2;
  d1 << 0.0, ct * cp, ct * sp, -st;
  d2 << 0.0, sp, -cp, 0.0;
  return {d1, d2};
}

HolonomyOp holonomy_closed_form(double angle) {
  HolonomyOp op;
  op.angle = angle;
  const double c = std::cos(angle), s = std::sin(angle);
  // cos(a) I - i sin(a) sigma_y = [[c, -s], [s, c]]
  op.u << c, -s, s, c;
  return op;
}

HolonomyOp holonomy_numeric(const LoopPath& loop, int n_steps) {
  if (!loop.closed()) throw std::invalid_argument("holonomy requires a closed loop");
  const auto samples = loop.discretize(n_steps);
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  double angle = 0.0;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const double dt = samples[i + 1].t - samples[i].t;
    if (dt <= 0.0) continue;
    const double tm = 0.5 * (samples[i].t + samples[i + 1].t);
    const double rate = holonomy_angle_rate(loop, tm);  // phi_dot cos(theta), midpoint
    const double da = rate * dt;
    angle += da;
    Eigen::Matrix2cd step;
    step << std::cos(da), -std::sin(da), std::sin(da), std::cos(da);
    u = step * u;
  }
  HolonomyOp op;
  op.u = u;
  op.angle = angle;
  return op;
}

}  // namespace loopgate
