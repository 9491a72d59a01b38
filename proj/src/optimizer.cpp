#include "loopgate/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace loopgate {

namespace {

constexpr double kPi = std::numbers::pi;

// int_0^theta sin^2(2u) du
double meridian_primitive(double theta) { return 0.5 * theta - 0.125 * std::sin(4.0 * theta); }

// (theta - sin(4 theta)/4) + a sin(theta) sin^2(2 theta)/(1 - cos theta),
// the K/v-stripped transition error of the constrained family.
double shape_function(double vt, double a) {
  const double theta = theta_m_for_time(a, 1.0, vt);
  double value = theta - 0.25 * std::sin(4.0 * theta);
  const double omc = 1.0 - std::cos(theta);
  if (omc > 0.0) {
    const double s2 = std::sin(2.0 * theta);
    value += a * std::sin(theta) * s2 * s2 / omc;
  }
  return value;
}

}  // namespace

SweepResult sweep_theta(const GateSpec& gate, const PhysicalParams& params,
                        const BathSpec& spec, double temperature,
                        const std::vector<double>& theta_grid) {
  validate_or_throw(gate);
  const double K = composite_K(params, spec, temperature);
  SweepResult out;
  out.axis = "theta_m";
  out.gate = gate;
  out.params = params;
  out.bath = spec;
  out.temperature = temperature;
  double prev = -1.0;
  for (double theta : theta_grid) {
    if (!(theta > 0.0 && theta <= kPi)) throw std::invalid_argument("theta grid outside (0, pi]");
    if (theta <= prev) throw std::invalid_argument("theta grid must be strictly increasing");
    prev = theta;
    SweepRow row;
    row.x = theta;
    row.breakdown.tr_meridian = delta_tr_meridian(theta, params.v_max, K);
    row.breakdown.tr_parallel = delta_tr_parallel(theta, gate.solid_angle, params.v_max, K);
    out.rows.push_back(row);
  }
  return out;
}

SweepResult sweep_time(const GateSpec& gate, const PhysicalParams& params,
                       const BathSpec& spec, double temperature,
                       const std::vector<double>& t_ad_grid) {
  validate_or_throw(gate);
  const double K = composite_K(params, spec, temperature);
  const double v = params.v_max;
  const double reference = K * kPi / (2.0 * v);
  SweepResult out;
  out.axis = "v_t";
  out.gate = gate;
  out.params = params;
  out.bath = spec;
  out.temperature = temperature;
  double prev = -1.0;
  for (double t_ad : t_ad_grid) {
    if (t_ad <= prev) throw std::invalid_argument("time grid must be strictly increasing");
    prev = t_ad;
    const double theta = theta_m_for_time(gate.solid_angle, v, t_ad);
    SweepRow row;
    row.x = v * t_ad;
    row.breakdown.tr_meridian = delta_tr_meridian(theta, v, K);
    row.breakdown.tr_parallel = delta_tr_parallel(theta, gate.solid_angle, v, K);
    row.reference = reference;
    out.rows.push_back(row);
  }
  return out;
}

double critical_k(const GateSpec& gate) {
  validate_or_throw(gate);
  const double a = gate.solid_angle;
  const double level = kPi / 2.0;
  // first minimum sits at vt = a (theta_m = pi/2); march outward to bracket
  // the down-crossing of the pi/2 level.
  double hi = 1.5 * a;
  if (shape_function(hi, a) <= level) {
    throw std::runtime_error("no rise above the pi/2 level after the first minimum");
  }
  int guard = 0;
  while (shape_function(hi, a) > level) {
    hi *= 1.5;
    if (++guard > 200) throw std::runtime_error("critical_k bracket not found");
  }
  double lo = hi / 1.5;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (shape_function(mid, a) > level ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

OptimizeResult optimize_loop(const GateSpec& gate, const PhysicalParams& params,
                             const BathSpec& spec, double temperature, double t_budget) {
  validate_or_throw(gate);
  if (t_budget <= 0.0) throw std::domain_error("time budget must be positive");
  const double a = gate.solid_angle;
  const double v = params.v_max;

  OptimizeResult out;
  out.k_c = critical_k(gate);
  if (v * t_budget >= out.k_c) {
    const double theta = theta_m_for_time(a, v, t_budget);
    out.loop = {theta, a / (1.0 - std::cos(theta)), v};
    out.used_time_constrained = true;
  } else {
    out.loop = {kPi / 2.0, a, v};
    if (total_time(out.loop) > t_budget) {
      throw std::domain_error("time budget below the pi/2 loop duration");
    }
  }
  out.breakdown = delta_breakdown(out.loop, gate, params, spec, temperature);
  return out;
}

double delta_tr_cn(const CnLoop& loop, double K) {
  if (loop.thetas.empty() || loop.thetas.size() != loop.delta_phis.size()) {
    throw std::invalid_argument("staircase needs matching theta/delta_phi lists");
  }
  if (loop.speed <= 0.0) throw std::invalid_argument("speed must be positive");
  double meridian = 0.0, theta = 0.0;
  for (double next : loop.thetas) {
    meridian += std::abs(meridian_primitive(next) - meridian_primitive(theta));
    theta = next;
  }
  meridian += std::abs(meridian_primitive(theta) - meridian_primitive(0.0));
  double parallel = 0.0;
  for (std::size_t i = 0; i < loop.thetas.size(); ++i) {
    const double th = loop.thetas[i];
    const double s2 = std::sin(2.0 * th);
    parallel += loop.delta_phis[i] * std::sin(th) * s2 * s2;
  }
  return K * (meridian + parallel) / loop.speed;
}

AppendixReport verify_appendix_inequalities(const CnLoop& c2) {
  if (c2.thetas.size() != 2) throw std::invalid_argument("verify_appendix needs a C2 loop");
  const double th1 = c2.thetas[0], th2 = c2.thetas[1];
  if (!(th1 > 0.0 && th2 > 0.0 && th1 <= th2 && th2 < kPi)) {
    throw std::invalid_argument("need 0 < theta1 <= theta2 < pi");
  }
  const double dphi1 = c2.delta_phis[0], dphi2 = c2.delta_phis[1];
  if (dphi1 < 0.0 || dphi2 < 0.0) throw std::invalid_argument("windings must be >= 0");
  const double v = c2.speed;
  const double a = c2.solid_angle();
  if (a <= 0.0) throw std::invalid_argument("degenerate solid angle");

  AppendixReport rep;
  rep.theta1 = th1;
  rep.theta2 = th2;
  rep.dphi1 = dphi1;
  rep.dphi2 = dphi2;
  rep.solid_angle = a;

  const double K = 1.0;
  rep.dm_c11 = delta_tr_meridian(th1, v, K);
  rep.dm_c12 = delta_tr_meridian(th2, v, K);
  rep.dm_c2 = 2.0 * K * meridian_primitive(th2) / v;  // climbs depend on theta2 only
  rep.dp_c11 = delta_tr_parallel(th1, a, v, K);
  rep.dp_c12 = delta_tr_parallel(th2, a, v, K);
  auto per_arc = [&](double theta, double dphi) {
    const double s2 = std::sin(2.0 * theta);
    return K * dphi * std::sin(theta) * s2 * s2 / v;
  };
  rep.dp_c2 = per_arc(th1, dphi1) + per_arc(th2, dphi2);

  rep.a4_difference = rep.dp_c2 - rep.dp_c12;
  rep.a5_difference = rep.dp_c2 - rep.dp_c11;

  const double tol = 1e-12 * std::max(1.0, rep.dm_c2);
  rep.meridian_ordering_ok =
      rep.dm_c11 <= rep.dm_c12 + tol && std::abs(rep.dm_c12 - rep.dm_c2) <= tol;
  const double d_c11 = rep.dm_c11 + rep.dp_c11;
  const double d_c12 = rep.dm_c12 + rep.dp_c12;
  const double d_c2 = rep.dm_c2 + rep.dp_c2;
  rep.minimum_ok = std::min(d_c11, d_c12) <= d_c2 + 1e-12 * std::max(1.0, d_c2);
  return rep;
}

BruteForceResult brute_force_minimizer(const GateSpec& gate, double v, int resolution) {
  validate_or_throw(gate);
  if (v <= 0.0) throw std::invalid_argument("speed must be positive");
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
  const double a = gate.solid_angle;
  std::vector<double> grid(resolution);
  for (int i = 0; i < resolution; ++i) grid[i] = kPi * (i + 1) / resolution;

  constexpr int kSplits = 8;
  BruteForceResult out;
  out.grid_step = kPi / resolution;
  out.best_delta = std::numeric_limits<double>::infinity();
  out.best_c1_delta = std::numeric_limits<double>::infinity();

  auto consider = [&](const CnLoop& cand) {
    const double d = delta_tr_cn(cand, 1.0);
    if (d < out.best_delta) {
      out.best_delta = d;
      out.best = cand;
    }
  };

  for (int i = 0; i < resolution; ++i) {
    CnLoop c1{{grid[i]}, {a / (1.0 - std::cos(grid[i]))}, v};
    const double d = delta_tr_cn(c1, 1.0);
    out.best_c1_delta = std::min(out.best_c1_delta, d);
    consider(c1);
  }
  for (int i = 0; i < resolution; ++i) {
    for (int j = i + 1; j < resolution; ++j) {
      const double w1 = 1.0 - std::cos(grid[i]), w2 = 1.0 - std::cos(grid[j]);
      for (int f = 0; f <= kSplits; ++f) {
        const double a1 = a * f / kSplits;
        consider(CnLoop{{grid[i], grid[j]}, {a1 / w1, (a - a1) / w2}, v});
      }
    }
  }
  for (int i = 0; i < resolution; ++i) {
    for (int j = i + 1; j < resolution; ++j) {
      for (int k = j + 1; k < resolution; ++k) {
        const double w1 = 1.0 - std::cos(grid[i]);
        const double w2 = 1.0 - std::cos(grid[j]);
        const double w3 = 1.0 - std::cos(grid[k]);
        for (int f1 = 0; f1 <= kSplits; ++f1) {
          for (int f2 = 0; f1 + f2 <= kSplits; ++f2) {
            const double a1 = a * f1 / kSplits;
            const double a2 = a * f2 / kSplits;
            const double a3 = a - a1 - a2;
            consider(CnLoop{{grid[i], grid[j], grid[k]}, {a1 / w1, a2 / w2, a3 / w3}, v});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace loopgate
