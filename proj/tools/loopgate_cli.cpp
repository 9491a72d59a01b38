#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopgate/config.hpp"
#include "loopgate/error_functionals.hpp"
#include "loopgate/numerics.hpp"
#include "loopgate/optimizer.hpp"
#include "loopgate/oracle.hpp"
#include "loopgate/units.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace loopgate;

constexpr double kPi = std::numbers::pi;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) {
    grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  }
  return grid;
}

int run_sweep_theta(const RunConfig& cfg, const std::string& out_path) {
  std::vector<double> grid(cfg.theta_points);
  for (int i = 0; i < cfg.theta_points; ++i) {
    grid[i] = kPi * (i + 1) / cfg.theta_points;
  }
  const auto sweep = sweep_theta(cfg.gate, cfg.params, cfg.bath, cfg.params.temperature(), grid);
  std::vector<std::vector<double>> rows;
  for (const auto& row : sweep.rows) {
    rows.push_back({row.x, row.breakdown.delta_tr(), row.breakdown.tr_meridian,
                    row.breakdown.tr_parallel});
  }
  write_csv(out_path, {"theta_m", "delta_tr", "delta_tr_meridian", "delta_tr_parallel"}, rows);
  return 0;
}

int run_sweep_time(const RunConfig& cfg, const std::string& out_path) {
  const double a = cfg.gate.solid_angle;
  const double v = cfg.params.v_max;
  const double vt_lo = cfg.vt_min > 0.0 ? cfg.vt_min : a;
  const double vt_hi = cfg.vt_max > 0.0 ? cfg.vt_max : 40.0 * a;
  if (vt_hi <= vt_lo) throw ConfigError("vt_max must exceed vt_min");
  std::vector<double> t_grid(cfg.time_points);
  for (int i = 0; i < cfg.time_points; ++i) {
    t_grid[i] = (vt_lo + (vt_hi - vt_lo) * i / (cfg.time_points - 1)) / v;
  }
  const auto sweep = sweep_time(cfg.gate, cfg.params, cfg.bath, cfg.params.temperature(), t_grid);
  std::vector<std::vector<double>> rows;
  for (const auto& row : sweep.rows) {
    rows.push_back({row.x, row.breakdown.delta_tr(), row.reference});
  }
  write_csv(out_path, {"v_t", "delta_tr", "reference_line"}, rows);
  return 0;
}

int run_optimize(const RunConfig& cfg, const std::string& out_path) {
  const auto result =
      optimize_loop(cfg.gate, cfg.params, cfg.bath, cfg.params.temperature(), cfg.t_budget_ps);
  json j;
  j["t_budget_ps"] = cfg.t_budget_ps;
  j["k_c"] = result.k_c;
  j["branch"] = result.used_time_constrained ? "time_constrained" : "theta_pi_half";
  j["loop"] = {{"theta_m", result.loop.theta_m},
               {"delta_phi", result.loop.delta_phi},
               {"speed", result.loop.speed}};
  j["loop_time_ps"] = total_time(result.loop);
  j["breakdown"] = {{"delta_tr_meridian", result.breakdown.tr_meridian},
                    {"delta_tr_parallel", result.breakdown.tr_parallel},
                    {"delta_pd_meridian", result.breakdown.pd_meridian},
                    {"delta_pd_parallel", result.breakdown.pd_parallel},
                    {"total", result.breakdown.total()}};
  write_text(out_path, j.dump(2) + "\n");
  return 0;
}

int run_critical_k(const RunConfig& cfg, const std::string& out_path) {
  const double kc = critical_k(cfg.gate);
  const double asym = 32.0 * cfg.gate.solid_angle * cfg.gate.solid_angle / kPi;
  json j;
  j["solid_angle_rad"] = cfg.gate.solid_angle;
  j["k_c"] = kc;
  j["asymptotic_32a2_over_pi"] = asym;
  j["critical_time_ps"] = kc / cfg.params.v_max;
  write_text(out_path, j.dump(2) + "\n");
  return 0;
}

int run_scaling(const RunConfig& cfg, const std::string& out_path) {
  const double v = cfg.params.v_max;
  const double kc = critical_k(cfg.gate);
  const double T = cfg.params.temperature();
  const auto grid = geometric_grid(2.0 * kc / v, 20.0 * kc / v, 9);
  std::vector<std::vector<double>> rows;
  std::vector<double> ts, dtr, dpdp, dpdm;
  const double K = composite_K(cfg.params, cfg.bath, T);
  for (double t_ad : grid) {
    const double theta = theta_m_for_time(cfg.gate.solid_angle, v, t_ad);
    const C1Loop loop{theta, cfg.gate.solid_angle / (1.0 - std::cos(theta)), v};
    const double tr = delta_tr_meridian(theta, v, K) +
                      delta_tr_parallel(theta, cfg.gate.solid_angle, v, K);
    const double pdp = delta_pd_parallel(loop, cfg.bath, T);
    const double pdm = delta_pd_meridian(loop, cfg.bath, T);
    rows.push_back({t_ad, tr, pdp, pdm});
    ts.push_back(t_ad);
    dtr.push_back(tr);
    dpdp.push_back(std::abs(pdp));
    dpdm.push_back(std::abs(pdm));
  }
  write_csv(out_path, {"t_ad_ps", "delta_tr", "delta_pd_parallel", "delta_pd_meridian"}, rows);
  const auto fit_tr = fit_powerlaw(ts, dtr);
  const auto fit_pp = fit_powerlaw(ts, dpdp);
  const auto fit_pm = fit_powerlaw(ts, dpdm);
  std::cout << "fit delta_tr          exponent " << format_number(fit_tr.exponent) << "\n"
            << "fit |delta_pd_par|    exponent " << format_number(fit_pp.exponent) << "\n"
            << "fit |delta_pd_mer|    exponent " << format_number(fit_pm.exponent) << "\n";
  return 0;
}

int run_verify_appendix(const RunConfig& cfg, const std::string& out_path) {
  numerics::Rng rng(cfg.seed);
  int a1_failures = 0, min_failures = 0;
  double worst_margin = 1e300;
  for (int i = 0; i < cfg.samples; ++i) {
    const double th1 = rng.uniform(1e-3, kPi - 2e-3);
    const double th2 = rng.uniform(th1, kPi - 1e-3);
    CnLoop c2{{th1, th2},
              {rng.uniform(1e-3, 4.0 * kPi), rng.uniform(1e-3, 4.0 * kPi)},
              cfg.params.v_max};
    const auto rep = verify_appendix_inequalities(c2);
    if (!rep.meridian_ordering_ok) ++a1_failures;
    if (!rep.minimum_ok) ++min_failures;
    const double margin = (rep.dm_c2 + rep.dp_c2) -
                          std::min(rep.dm_c11 + rep.dp_c11, rep.dm_c12 + rep.dp_c12);
    worst_margin = std::min(worst_margin, margin);
  }

  CnLoop example{{kPi / 4, kPi / 2}, {kPi, kPi}, cfg.params.v_max};
  const auto rep = verify_appendix_inequalities(example);

  const auto brute = brute_force_minimizer(cfg.gate, cfg.params.v_max, cfg.resolution);
  const bool brute_ok =
      brute.best_delta >= brute.best_c1_delta - 1e-12 ||
      brute.best_c1_delta - brute.best_delta < brute.grid_step;

  const bool pass = a1_failures == 0 && min_failures == 0 && brute_ok;
  json j;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["meridian_ordering_failures"] = a1_failures;
  j["minimum_failures"] = min_failures;
  j["worst_margin"] = worst_margin;
  j["example"] = {{"theta1", rep.theta1},
                  {"theta2", rep.theta2},
                  {"delta_phi1", rep.dphi1},
                  {"delta_phi2", rep.dphi2},
                  {"a4_difference", rep.a4_difference},
                  {"a5_difference", rep.a5_difference},
                  {"dm_c11", rep.dm_c11},
                  {"dm_c12", rep.dm_c12},
                  {"dm_c2", rep.dm_c2},
                  {"dp_c11", rep.dp_c11},
                  {"dp_c12", rep.dp_c12},
                  {"dp_c2", rep.dp_c2}};
  j["brute_force"] = {{"resolution", cfg.resolution},
                      {"best_delta", brute.best_delta},
                      {"best_c1_delta", brute.best_c1_delta},
                      {"grid_step", brute.grid_step},
                      {"n_parallels", brute.best.thetas.size()}};
  j["pass"] = pass;
  write_text(out_path, j.dump(2) + "\n");
  return pass ? 0 : 3;
}

int run_oracle_check(const RunConfig& cfg, const std::string& out_path) {
  const double v = cfg.params.v_max;
  const double T = cfg.params.temperature();
  const double K = composite_K(cfg.params, cfg.bath, T);
  const struct {
    double theta, dphi_over_pi, v_frac;
  } loops[] = {{kPi / 8, 40, 1.0 / 16}, {kPi / 8, 80, 1.0 / 8}, {kPi / 4, 12, 1.0 / 16},
               {kPi / 4, 20, 1.0 / 16}, {kPi / 2, 8, 1.0 / 32}};
  std::vector<std::vector<double>> rows;
  const auto a_op = noise_operator(NoiseKind::kDephase0);
  for (const auto& spec_loop : loops) {
    const C1Loop loop{spec_loop.theta, spec_loop.dphi_over_pi * kPi, v * spec_loop.v_frac};
    const double a = solid_angle(loop);
    const double closed = delta_tr_meridian(loop.theta_m, loop.speed, K) +
                          delta_tr_parallel(loop.theta_m, a, loop.speed, K) +
                          delta_pd_parallel(loop, cfg.bath, T) +
                          delta_pd_meridian(loop, cfg.bath, T);
    const auto path = loop.to_path();
    const int steps = std::max(cfg.steps, static_cast<int>(path.total_time() * 4.0));
    const double oracle = average_error_oracle(path, a_op, cfg.params, cfg.bath, T, steps);
    rows.push_back({loop.theta_m, loop.delta_phi, loop.speed, path.total_time(), closed, oracle,
                    std::abs(oracle - closed) / closed});
  }
  write_csv(out_path,
            {"theta_m", "delta_phi", "speed", "t_ad_ps", "closed_total", "oracle_total",
             "rel_gap"},
            rows);
  return 0;
}

int run_compare_stirap(const RunConfig& cfg, const std::string& out_path) {
  const double v = cfg.params.v_max;
  const double T = cfg.params.temperature();
  const double t_min = 2.0 * kPi / v * 1.05;
  const auto grid = geometric_grid(t_min, 50.0 * t_min, cfg.time_points > 16 ? 16 : cfg.time_points);
  std::vector<std::vector<double>> rows;
  for (double t_ad : grid) {
    const auto holo = optimize_loop(cfg.gate, cfg.params, cfg.bath, T, t_ad);
    const double stirap = stirap_error(cfg.gate, cfg.params, cfg.bath, T, t_ad);
    rows.push_back({t_ad, holo.breakdown.total(), stirap});
  }
  write_csv(out_path, {"t_ad_ps", "delta_holonomic", "delta_stirap"}, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holonomic-gate environmental error toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_path = "out.csv", format = "csv";
  std::uint64_t seed_flag = 0;
  int steps_flag = 0, samples_flag = 0;
  bool seed_given = false, steps_given = false, samples_given = false;

  app.add_option("--config", config_path, "config file (flat key=value with sections)");
  app.add_option("--out", out_path, "output path");
  app.add_option("--seed", seed_flag, "random seed")->each([&](const std::string&) {
    seed_given = true;
  });
  app.add_option("--steps", steps_flag, "time steps for quadratures")
      ->each([&](const std::string&) { steps_given = true; });
  app.add_option("--samples", samples_flag, "sample count for randomized checks")
      ->each([&](const std::string&) { samples_given = true; });
  app.add_option("--format", format, "csv|json (informational; commands pick their format)");

  auto* sweep_theta_cmd = app.add_subcommand("sweep-theta", "transition error versus theta_m");
  auto* sweep_time_cmd = app.add_subcommand("sweep-time", "transition error versus v_max t_ad");
  auto* optimize_cmd = app.add_subcommand("optimize", "best loop for a time budget");
  auto* critical_cmd = app.add_subcommand("critical-k", "critical v_max t_ad for the gate");
  auto* scaling_cmd = app.add_subcommand("scaling", "power-law fits of the error parts");
  auto* appendix_cmd = app.add_subcommand("verify-appendix", "staircase-reduction inequalities");
  auto* oracle_cmd = app.add_subcommand("oracle-check", "closed forms versus master equation");
  auto* stirap_cmd = app.add_subcommand("compare-stirap", "holonomic versus pole-to-pole error");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = config_path.empty() ? RunConfig::defaults() : parse_config(config_path);
    if (seed_given) cfg.seed = seed_flag;
    if (steps_given) cfg.steps = steps_flag;
    if (samples_given) cfg.samples = samples_flag;

    if (sweep_theta_cmd->parsed()) return run_sweep_theta(cfg, out_path);
    if (sweep_time_cmd->parsed()) return run_sweep_time(cfg, out_path);
    if (optimize_cmd->parsed()) return run_optimize(cfg, out_path);
    if (critical_cmd->parsed()) return run_critical_k(cfg, out_path);
    if (scaling_cmd->parsed()) return run_scaling(cfg, out_path);
    if (appendix_cmd->parsed()) return run_verify_appendix(cfg, out_path);
    if (oracle_cmd->parsed()) return run_oracle_check(cfg, out_path);
    if (stirap_cmd->parsed()) return run_compare_stirap(cfg, out_path);
    std::cerr << "unknown command\n";
    return 1;
  } catch (const loopgate::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 1;
  } catch (const std::domain_error& err) {
    std::cerr << "infeasible run: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
