#pragma once

#include <Eigen/Dense>
#include <array>

#include "loopgate/loop.hpp"
#include "loopgate/params.hpp"

namespace loopgate {

// Basis order everywhere: (|G>, |+>, |->, |0>).
using Matrix4cd = Eigen::Matrix4cd;
using Vector4cd = Eigen::Vector4cd;

// Omega * (sin t cos p, sin t sin p, cos t); norm Omega. rad/ps.
std::array<double, 3> rabi_vector(double theta, double phi, double omega);

// Rotating-frame Hamiltonian: diag(0, eps, eps, eps) plus Rabi couplings
// to |G>. rad/ps units.
Matrix4cd build_hamiltonian(double theta, double phi, const PhysicalParams& params);

struct EigenSystem {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double epsilon = 0.0;
  Vector4cd bright_plus;
  Vector4cd bright_minus;
  Vector4cd dark1;
  Vector4cd dark2;
};

// Instantaneous eigensystem; dark vectors identified by vanishing |G>
// component, bright energies by the closed form.
EigenSystem eigensystem(double theta, double phi, const PhysicalParams& params);

// Smooth analytic dark frame:
//   D1 = (0, cos t cos p, cos t sin p, -sin t)
//   D2 = (0, sin p, -cos p, 0)
// At theta = 0, phi = 0 this is (|+>, -|->); in this frame
// <D_i|d/dt|D_j> = i sigma_y cos(theta) phi_dot.
std::array<Vector4cd, 2> dark_frame(double theta, double phi);

// 2x2 rotation in the dark/logical frame: cos(a) I - i sin(a) sigma_y.
struct HolonomyOp {
  Eigen::Matrix2cd u;
  double angle = 0.0;
};

HolonomyOp holonomy_closed_form(double angle);

// Path-ordered transport generated by -V, V = i sigma_y cos(theta) phi_dot,
// over the discretized loop; converges (order >= 2) to
// holonomy_closed_form(int phi_dot cos theta dt).
HolonomyOp holonomy_numeric(const LoopPath& loop, int n_steps);

}  // namespace loopgate
