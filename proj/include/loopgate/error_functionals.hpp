#pragma once

#include <Eigen/Dense>

#include "loopgate/bath.hpp"
#include "loopgate/loop.hpp"
#include "loopgate/params.hpp"

namespace loopgate {

struct ErrorBreakdown {
  double tr_meridian = 0.0;
  double tr_parallel = 0.0;
  double pd_meridian = 0.0;
  double pd_parallel = 0.0;

  double delta_tr() const { return tr_meridian + tr_parallel; }
  double delta_pd() const { return pd_meridian + pd_parallel; }
  double total() const { return delta_tr() + delta_pd(); }
  // Perturbative-regime validity; reported, never clamped. Dephasing parts
  // may go slightly negative from the non-Markovian kernel tail.
  bool perturbative() const { return total() >= 0.0 && total() <= 1.0; }
};

enum class NoiseKind { kDephase0, kSplitPm };

// Diagonal noise operator in the (|G>,|+>,|->,|0>) basis.
Eigen::Matrix4d noise_operator(NoiseKind kind);

// (K/v) (theta_m - sin(4 theta_m)/4); both meridian legs.
double delta_tr_meridian(double theta_m, double v, double K);

// K (a/v) sin(theta_m) sin^2(2 theta_m) / (1 - cos theta_m).
// theta_m = 0 is infeasible unless a = 0.
double delta_tr_parallel(double theta_m, double a, double v, double K);

// Transition parts for a C1 loop realizing the gate's solid angle.
ErrorBreakdown delta_tr_c1(const C1Loop& loop, const GateSpec& gate, double K);

// Time windows for the pure-dephasing quadratures. kLoopTime keeps a single
// absolute time axis across the loop; kSegmentRestart restarts the kernel
// clock at each window; kLiteralEq26 integrates the parallel weight over the
// whole [0, t_ad] axis.
enum class PdWindow { kLoopTime, kSegmentRestart, kLiteralEq26 };

// (pi/8) int dt int dw (J/w) coth(w/2T) sin(w t) Q[a(t)] sin^4(theta(t))
// restricted to the parallel / meridian windows. Q[a] = 1 + sin^2(2a)/2 with
// a(t) the raw holonomy angle accumulated along the loop.
double delta_pd_parallel(const C1Loop& loop, const BathSpec& spec, double temperature,
                         PdWindow window = PdWindow::kLoopTime);
double delta_pd_meridian(const C1Loop& loop, const BathSpec& spec, double temperature,
                         PdWindow window = PdWindow::kLoopTime);

// Full four-part breakdown for a C1 loop.
ErrorBreakdown delta_breakdown(const C1Loop& loop, const GateSpec& gate,
                               const PhysicalParams& params, const BathSpec& spec,
                               double temperature);

// Channel-resolved average error: sum_n int dt G_n(t) |<psi_0(t)|A|phi_n(t)>|^2
// with exact transported matrix elements, averaged exactly over the logical
// 2-design. Carries the same global normalization as the closed-form K
// convention. plateau_transitions replaces the non-degenerate kernels by
// their stationary limits.
double delta_general(const LoopPath& loop, const Eigen::Matrix4d& noise,
                     const PhysicalParams& params, const BathSpec& spec, double temperature,
                     int n_steps, bool plateau_transitions = false);

// K int [ (sin(2 theta) cos(2 theta)/2)^2 + (sin(theta) sin(2 phi))^2 ] dt
// over the loop; transition error for the split-level noise operator.
double delta_tr_general_noise(const LoopPath& loop, const PhysicalParams& params,
                              const BathSpec& spec, double temperature);

struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;
  double residual = 0.0;  // rms in log space
};

// Least-squares log-log fit of delta = prefactor * t^exponent.
// Needs >= 5 strictly positive samples.
PowerLawFit fit_powerlaw(const std::vector<double>& t, const std::vector<double>& delta);

}  // namespace loopgate
