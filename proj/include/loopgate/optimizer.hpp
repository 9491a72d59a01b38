#pragma once

#include <string>
#include <vector>

#include "loopgate/error_functionals.hpp"

namespace loopgate {

struct SweepRow {
  double x = 0.0;
  ErrorBreakdown breakdown;
  double reference = 0.0;  // filled by sweep_time
};

struct SweepResult {
  std::string axis;
  std::vector<SweepRow> rows;
  GateSpec gate;
  PhysicalParams params;
  BathSpec bath;
  double temperature = 0.0;
};

// delta_tr(theta_m) from the closed forms at v = v_max,
// delta_phi = a / (1 - cos theta_m).
SweepResult sweep_theta(const GateSpec& gate, const PhysicalParams& params,
                        const BathSpec& spec, double temperature,
                        const std::vector<double>& theta_grid);

// delta_tr versus v_max * t_ad along the constrained loop family, with the
// theta_m = pi/2 level as reference.
SweepResult sweep_time(const GateSpec& gate, const PhysicalParams& params,
                       const BathSpec& spec, double temperature,
                       const std::vector<double>& t_ad_grid);

// v_max * t_c where the constrained-family error re-crosses the theta_m = pi/2
// level beyond the first minimum. Dimensionless; independent of K and v_max.
double critical_k(const GateSpec& gate);

struct OptimizeResult {
  C1Loop loop;
  ErrorBreakdown breakdown;
  bool used_time_constrained = false;  // false: theta_m = pi/2 branch
  double k_c = 0.0;
};

// theta_m = pi/2 loop below the critical budget, the time-constrained loop
// above it; breakdown includes pure dephasing. Throws std::domain_error on an
// infeasible budget.
OptimizeResult optimize_loop(const GateSpec& gate, const PhysicalParams& params,
                             const BathSpec& spec, double temperature, double t_budget);

struct AppendixReport {
  double theta1 = 0.0, theta2 = 0.0, dphi1 = 0.0, dphi2 = 0.0;
  double solid_angle = 0.0;
  double dm_c11 = 0.0, dm_c12 = 0.0, dm_c2 = 0.0;
  double dp_c11 = 0.0, dp_c12 = 0.0, dp_c2 = 0.0;
  double a4_difference = 0.0;  // dP(C2) - dP(C1^2)
  double a5_difference = 0.0;  // dP(C2) - dP(C1^1)
  bool meridian_ordering_ok = false;  // dM(C1^1) <= dM(C1^2) = dM(C2)
  bool minimum_ok = false;            // min(d(C1^1), d(C1^2)) <= d(C2)
};

// Checks the two-parallel reduction inequalities for a C2 staircase
// (thetas = {theta1 <= theta2}) against the equal-solid-angle C1 loops.
AppendixReport verify_appendix_inequalities(const CnLoop& c2);

// Transition error of a staircase loop (K/v units included).
double delta_tr_cn(const CnLoop& loop, double K);

struct BruteForceResult {
  CnLoop best;
  double best_delta = 0.0;
  double best_c1_delta = 0.0;
  double grid_step = 0.0;
};

// Exhaustive search over ascending C_n staircases (n <= 3) at fixed solid
// angle; theta grid of `resolution` steps on (0, pi], solid angle split over
// a coarse simplex grid.
BruteForceResult brute_force_minimizer(const GateSpec& gate, double v, int resolution);

}  // namespace loopgate
