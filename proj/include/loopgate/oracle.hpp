#pragma once

#include <Eigen/Dense>

#include "loopgate/bath.hpp"
#include "loopgate/loop.hpp"
#include "loopgate/params.hpp"

namespace loopgate {

// 4x4 density matrix with the invariants the integrator must preserve.
struct DensityMatrix {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();

  double trace_error() const;      // |tr - 1|
  double hermiticity_error() const;
  double min_eigenvalue() const;   // small negativity is reported, not clipped

  static DensityMatrix pure(const Eigen::Vector4cd& psi);
};

// Pole-to-pole schedule: theta 0 -> pi -> 0 along meridians (with the
// zero-length phase arc at the south pole), traversed at 2*pi/t_ad.
struct StirapSchedule {
  double t_ad = 0.0;
  double v_eff = 0.0;

  LoopPath to_path() const;
  static StirapSchedule for_time(double t_ad, double v_max);  // throws if too fast
};

// Interaction-picture state after the loop, to strictly second order in the
// system-bath coupling: rho(0) plus the double time integral of the
// memory-kernel commutator structure, with the noise operator transported
// by the adiabatic propagator and the memory integral truncated at 20/w_c.
// Throws when `steps` cannot resolve the bath memory time.
DensityMatrix evolve_second_order(const LoopPath& loop, const Eigen::Matrix4d& noise,
                                  const PhysicalParams& params, const BathSpec& spec,
                                  double temperature, const DensityMatrix& initial,
                                  int steps);

// 1 - <psi0| rho~(t_ad) |psi0> averaged exactly over the logical 2-design.
double average_error_oracle(const LoopPath& loop, const Eigen::Matrix4d& noise,
                            const PhysicalParams& params, const BathSpec& spec,
                            double temperature, int steps);

// Transition error of the fixed pole-to-pole schedule: K * t_ad / 2
// (the full 0->pi->0 meridian functional at the stretched speed).
double stirap_error(const GateSpec& gate, const PhysicalParams& params, const BathSpec& spec,
                    double temperature, double t_ad);

}  // namespace loopgate
