#include "pursuit/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "pursuit/angles.hpp"
#include "pursuit/catalog.hpp"
#include "pursuit/oracles.hpp"

namespace pursuit {
namespace acceptance {

namespace {

CriterionResult make_result(std::string id, std::string description,
                            double measured, double bound, bool pass,
                            std::string detail = "") {
  return {std::move(id), std::move(description), measured, bound, pass,
          std::move(detail)};
}

// C1: chi(0) reproduction for the baseline cooperative geometry.
CriterionResult criterion_chi0() {
  const ScenarioConfig cfg = catalog_scenario("fig3_chi180");
  const EngagementState s0 = cfg.initial_engagement();
  const double chi0_deg = rad_to_deg(s0.chi);
  const double dev = std::abs(chi0_deg - 228.0);
  return make_result("C01", "chi(0) reproduction", chi0_deg, 0.5, dev <= 0.5,
                     "deviation from 228 deg = " + std::to_string(dev));
}

// C2: prescribed-time bounds and defender capture on the baseline run. The
// manifold bounds come from the sliding-mode argument, whose premises are
// realizable commands and switching gain dominance K > a_P/r_DP; rows where a
// command saturates or r_DP has shrunk below a_P_max/K are outside that
// domain and are excluded from the bound (capture still has to happen).
CriterionResult criterion_maneuver_prescribed_time(
    const SimulationTrace& trace, const ScenarioConfig& cfg) {
  const double r_dp_valid = cfg.lim_p.a_max / cfg.guidance.K;
  double max_s_outer = 0.0, max_s_inner_late = 0.0, max_beta_late = 0.0;
  for (const TraceRow& row : trace.rows) {
    const bool saturated = row.cmd.a_p != row.cmd.raw_a_p ||
                           row.cmd.a_e != row.cmd.raw_a_e ||
                           row.cmd.a_d != row.cmd.raw_a_d;
    if (!saturated && row.dp.r > r_dp_valid) {
      max_s_outer = std::max(max_s_outer, std::abs(row.s_outer));
      if (row.t >= 3.1) {
        max_s_inner_late = std::max(max_s_inner_late, std::abs(row.s_inner));
      }
    }
    if (row.t >= 6.0) max_beta_late = std::max(max_beta_late, std::abs(row.beta));
  }
  const bool captured =
      trace.event.kind == EventKind::defender_captures_pursuer &&
      trace.event.min_r_ep > 1.0;
  const bool pass = max_s_outer <= 2e-3 && max_s_inner_late <= 2e-3 &&
                    max_beta_late <= 1e-2 && captured;
  std::ostringstream detail;
  detail << "max|S_outer|=" << max_s_outer << " (<=2e-3), max|S_inner| t>=3.1s="
         << max_s_inner_late << " (<=2e-3), max|beta| t>=6s=" << max_beta_late
         << " (<=1e-2), defender_capture=" << (captured ? "yes" : "no")
         << ", min_r_EP=" << trace.event.min_r_ep;
  return make_result("C02", "maneuver-level prescribed time", max_s_outer,
                     2e-3, pass, detail.str());
}

// C3: closed-form beta tracking on the same run.
CriterionResult criterion_beta_tracking(const SimulationTrace& trace,
                                        const GuidanceConfig& cfg) {
  const auto dev = oracles::closed_form_compare(trace, cfg);
  return make_result("C03", "closed-form beta tracking", dev.max_beta_dev,
                     1e-2, dev.max_beta_dev <= 1e-2);
}

// C4: PNG / PPG / DPG pursuers all end in defender capture.
CriterionResult criterion_pursuer_laws() {
  int captures = 0;
  std::ostringstream detail;
  for (const char* name : {"fig4_png", "fig4_ppg", "fig4_dpg"}) {
    const SimulationTrace trace = run(catalog_scenario(name));
    const bool ok = trace.event.kind == EventKind::defender_captures_pursuer;
    captures += ok;
    detail << name << "=" << (ok ? "capture" : "miss") << " ";
  }
  return make_result("C04", "pursuer-law robustness", captures, 3,
                     captures == 3, detail.str());
}

// C5: stationary-evader placements all captured with beta nulled by t*.
CriterionResult criterion_stationary_evader() {
  int ok_count = 0;
  double worst_beta = 0.0;
  std::ostringstream detail;
  const char* names[] = {"fig5_d400",   "fig5_d1500",  "fig5_d2000",
                         "fig6_p_losm5", "fig6_p_los0", "fig6_p_los2"};
  for (const char* name : names) {
    const ScenarioConfig cfg = catalog_scenario(name);
    const SimulationTrace trace = run(cfg);
    double max_beta_late = 0.0;
    for (const TraceRow& row : trace.rows) {
      if (row.t >= cfg.guidance.t_star) {
        max_beta_late = std::max(max_beta_late, std::abs(row.beta));
      }
    }
    worst_beta = std::max(worst_beta, max_beta_late);
    const bool ok =
        trace.event.kind == EventKind::defender_captures_pursuer &&
        max_beta_late <= 1e-2;
    ok_count += ok;
    detail << name << "=" << (ok ? "ok" : "FAIL") << " ";
  }
  detail << "worst max|beta| past t* = " << worst_beta;
  return make_result("C05", "stationary-evader scenarios", ok_count, 6,
                     ok_count == 6, detail.str());
}

// C6: reduced acceleration authority still captures.
CriterionResult criterion_reduced_authority() {
  const SimulationTrace trace = run(catalog_scenario("fig9_reduced"));
  const bool ok = trace.event.kind == EventKind::defender_captures_pursuer;
  return make_result("C06", "reduced-authority run", ok ? 1 : 0, 1, ok,
                     "t_f=" + std::to_string(trace.event.t_f));
}

// C7: information-level decoy exactness plus the chi* and t2 sweeps.
CriterionResult criterion_information_level() {
  const ScenarioConfig base = catalog_scenario("fig7_info_chi180");
  const SimulationTrace trace = run(base);
  double max_lambda_dot = 0.0, max_a_e = 0.0, max_beta_late = 0.0;
  for (const TraceRow& row : trace.rows) {
    if (row.t >= base.guidance.t2) {
      max_lambda_dot = std::max(max_lambda_dot, std::abs(row.ep.lambda_dot));
    }
    if (row.t >= base.guidance.t2 + 0.05) {
      max_a_e = std::max(max_a_e, std::abs(row.cmd.a_e));
    }
    if (row.t >= base.guidance.t_star) {
      max_beta_late = std::max(max_beta_late, std::abs(row.beta));
    }
  }
  int captures = 0;
  std::ostringstream detail;
  const char* sweeps[] = {"fig7_info_chi150", "fig7_info_chi180",
                          "fig7_info_chi200", "fig8_info_t2_4",
                          "fig8_info_t2_6",   "fig8_info_t2_8"};
  for (const char* name : sweeps) {
    const SimulationTrace t = run(catalog_scenario(name));
    const bool ok = t.event.kind == EventKind::defender_captures_pursuer;
    captures += ok;
    detail << name << "=" << (ok ? "capture" : "miss") << " ";
  }
  const bool pass = max_lambda_dot <= 1e-4 && max_a_e <= 0.1 &&
                    max_beta_late <= 1e-2 && captures == 6;
  std::ostringstream d2;
  d2 << "max|lambda_dot_EP| t>=4s=" << max_lambda_dot
     << " (<=1e-4), max|a_E| t>=4.05s=" << max_a_e
     << " (<=0.1), max|beta| t>=9s=" << max_beta_late << " (<=1e-2), "
     << detail.str();
  return make_result("C07", "information-level decoy exactness",
                     max_lambda_dot, 1e-4, pass, d2.str());
}

// C8: allocation optimality and affine-constraint identity.
CriterionResult criterion_allocation() {
  std::mt19937 rng(20260824);
  std::uniform_real_distribution<double> log_mag(-3.0, 1.0);
  std::uniform_real_distribution<double> sign01(0.0, 1.0);
  auto draw = [&](double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
  };
  int pass_count = 0;
  double worst_rel = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double b1 = (sign01(rng) < 0.5 ? -1 : 1) * std::pow(10.0, log_mag(rng));
    const double b2 = (sign01(rng) < 0.5 ? -1 : 1) * std::pow(10.0, log_mag(rng));
    const double sigma = std::pow(10.0, draw(-1.0, 1.0));
    const double u = (sign01(rng) < 0.5 ? -1 : 1) * std::pow(10.0, draw(-2.0, 2.0));
    if (!oracles::allocation_grid_check(b1, b2, sigma, u)) continue;
    const double a_d = -b2 * u / (b1 * b1 * sigma * sigma + b2 * b2);
    const double a_e = (u + b2 * a_d) / b1;
    const double rel = std::abs(b1 * a_e - b2 * a_d - u) / std::abs(u);
    worst_rel = std::max(worst_rel, rel);
    if (rel <= 1e-10) ++pass_count;
  }
  return make_result("C08", "allocation optimality & identity", pass_count,
                     100, pass_count == 100,
                     "worst relative constraint error = " +
                         std::to_string(worst_rel));
}

// Builds a guidance-free trace: PNG pursuer, coasting evader and defender.
SimulationTrace smooth_png_trace(double dt, double horizon) {
  const ScenarioConfig cfg = catalog_scenario("fig3_chi180");
  EngagementState state = cfg.initial_engagement();
  PursuerLaw law;  // PNG, N = 3
  SimulationTrace trace;
  while (state.t < horizon) {
    GuidanceCommand cmd;
    cmd.raw_a_p = pursuer_command(law, state, 0.0);
    cmd.a_p = saturate(cmd.raw_a_p, cfg.lim_p);
    TraceRow row;
    row.t = state.t;
    row.pursuer = state.pursuer;
    row.evader = state.evader;
    row.defender = state.defender;
    row.cmd = cmd;
    row.ep = state.ep;
    row.dp = state.dp;
    row.ed = state.ed;
    row.chi = state.chi;
    row.beta = state.beta;
    trace.rows.push_back(row);
    state = step(state, cmd, dt);
  }
  return trace;
}

// C9: finite-difference validation of the analytic LOS accelerations and the
// RK4 order check against the closed-form circular arc.
CriterionResult criterion_analytic_derivatives() {
  const SimulationTrace trace = smooth_png_trace(1e-3, 10.0);
  const double dev_ep = oracles::fd_check_los_accel(trace, oracles::Pair::ep);
  const double dev_dp = oracles::fd_check_los_accel(trace, oracles::Pair::dp);
  const double dev_ed = oracles::fd_check_los_accel(trace, oracles::Pair::ed);
  const double worst = std::max({dev_ep, dev_dp, dev_ed});

  // Constant-command arc; end-point error against the analytic circle at two
  // step sizes gives the convergence ratio. Steps are coarse enough that the
  // truncation error sits well above the roundoff floor.
  const AgentState a0{0.0, 0.0, 100.0, 0.3};
  const double accel = 150.0, horizon = 1.6;
  auto end_error = [&](double dt) {
    AgentState a = a0;
    const int n = static_cast<int>(std::round(horizon / dt));
    for (int i = 0; i < n; ++i) {
      a = advance_agent(a, accel, dt, IntegratorKind::rk4);
    }
    const double omega = accel / a0.v;
    const double radius = a0.v * a0.v / accel;
    const double xa = a0.x + radius * (std::sin(a0.gamma + omega * horizon) -
                                       std::sin(a0.gamma));
    const double ya = a0.y - radius * (std::cos(a0.gamma + omega * horizon) -
                                       std::cos(a0.gamma));
    return std::hypot(a.x - xa, a.y - ya);
  };
  const double e1 = end_error(8e-2);
  const double e2 = end_error(4e-2);
  const double ratio = e1 / e2;

  const bool pass = worst < 1e-3 && ratio >= 12.0 && ratio <= 20.0;
  std::ostringstream detail;
  detail << "max FD deviation: EP=" << dev_ep << " DP=" << dev_dp
         << " ED=" << dev_ed << " (<1e-3); RK4 step-halving ratio=" << ratio
         << " (in [12,20])";
  return make_result("C09", "analytic-derivative validation", worst, 1e-3,
                     pass, detail.str());
}

// C10: randomized-geometry capture sweep.
CriterionResult criterion_proposition1_sweep() {
  std::mt19937 rng(987654321);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const int total = 200;
  int captures = 0, degenerate = 0, failures = 0;
  std::ostringstream first_failure;
  for (int i = 0; i < total; ++i) {
    ScenarioConfig cfg = catalog_scenario("fig3_chi180");
    cfg.sim.dt = 1e-2;
    cfg.sim.t_max = 120.0;
    cfg.sim.decimation = 10;
    cfg.pursuer_placement.range = 2000.0 + 6000.0 * u01(rng);
    cfg.pursuer_placement.los = kPi * (2.0 * u01(rng) - 1.0);
    // The capture guarantee presumes an attacking pursuer; the heading is
    // drawn within 30 deg of the evader-pointing direction.
    cfg.gamma_p = wrap_pi(cfg.pursuer_placement.los + kPi +
                          deg_to_rad(60.0) * (u01(rng) - 0.5));
    cfg.gamma_e = kPi * (2.0 * u01(rng) - 1.0);
    // The capture guarantee also presumes that the target angle is attainable
    // and that the defender closes on the pursuer. The defender draw is
    // accepted when its heading lies within 60 deg of the defender-pursuer
    // LOS and the geometry keeps the angle condition feasible: the initial
    // angle inside [140, 220] deg, the defender closer to the evader than
    // 0.4 r_EP, and the defender-pursuer conjunction no earlier than the
    // evader-pursuer one (r_DP >= 0.8 r_EP).
    EngagementState s0;
    cfg.guidance.chi_star = kPi;
    for (int tries = 0; tries < 1000; ++tries) {
      cfg.defender_placement.range = 200.0 + 1800.0 * u01(rng);
      cfg.defender_placement.los = kPi * (2.0 * u01(rng) - 1.0);
      const double xd = cfg.defender_placement.range *
                        std::cos(cfg.defender_placement.los);
      const double yd = cfg.defender_placement.range *
                        std::sin(cfg.defender_placement.los);
      const double xp = cfg.pursuer_placement.range *
                        std::cos(cfg.pursuer_placement.los);
      const double yp = cfg.pursuer_placement.range *
                        std::sin(cfg.pursuer_placement.los);
      const double los_dp = std::atan2(yp - yd, xp - xd);
      cfg.gamma_d = wrap_pi(los_dp + deg_to_rad(120.0) * (u01(rng) - 0.5));
      s0 = cfg.initial_engagement();
      if (s0.chi >= deg_to_rad(140.0) && s0.chi <= deg_to_rad(220.0) &&
          cfg.defender_placement.range <= 0.4 * cfg.pursuer_placement.range &&
          s0.dp.r >= 0.8 * s0.ep.r) {
        break;
      }
    }
    cfg.guidance.chi_star = s0.chi + deg_to_rad(40.0) * (u01(rng) - 0.5);
    // Prescribed times scale with the engagement: the angle must be attained
    // before the pursuer can close the initial separation.
    const double t_go = cfg.pursuer_placement.range / (cfg.v_p + cfg.v_e);
    cfg.guidance.t_star = std::max(0.5 * t_go, 4.5);
    cfg.guidance.t1 = 0.5 * cfg.guidance.t_star;
    cfg.guidance.terminal_handoff_radius = 500.0;
    cfg.guidance.terminal_nav_constant = 10.0;
    SimulationTrace trace;
    try {
      trace = run(cfg);
    } catch (const SingularGeometryError&) {
      ++degenerate;
      continue;
    } catch (const NumericalDivergenceError&) {
      ++degenerate;
      continue;
    }
    switch (trace.event.kind) {
      case EventKind::defender_captures_pursuer:
        ++captures;
        break;
      case EventKind::degenerate_geometry_abort:
        ++degenerate;
        break;
      default:
        ++failures;
        if (failures == 1) {
          first_failure << " first failure: case " << i << " event="
                        << static_cast<int>(trace.event.kind)
                        << " min_r_EP=" << trace.event.min_r_ep;
        }
        break;
    }
  }
  const double degenerate_rate = static_cast<double>(degenerate) / total;
  const bool pass = failures == 0 && degenerate_rate <= 0.02;
  std::ostringstream detail;
  detail << captures << "/" << total << " captures, " << degenerate
         << " degenerate aborts (rate " << degenerate_rate << " <= 0.02), "
         << failures << " non-capture terminations" << first_failure.str();
  return make_result("C10", "randomized-geometry capture sweep", captures,
                     total, pass, detail.str());
}
}  // namespace

std::vector<CriterionResult> run_suite(const std::string& suite) {
  const bool all = suite == "all";
  const bool maneuver = all || suite == "maneuver";
  const bool info = all || suite == "info";
  const bool properties = all || suite == "properties";
  if (!maneuver && !info && !properties) {
    throw ConfigError("unknown acceptance suite '" + suite +
                      "' (expected maneuver, info, properties, or all)");
  }

  std::vector<CriterionResult> results;
  if (maneuver) {
    results.push_back(criterion_chi0());
    const ScenarioConfig base = catalog_scenario("fig3_chi180");
    const SimulationTrace trace = run(base);
    results.push_back(criterion_maneuver_prescribed_time(trace, base));
    results.push_back(criterion_beta_tracking(trace, base.guidance));
    results.push_back(criterion_pursuer_laws());
    results.push_back(criterion_stationary_evader());
    results.push_back(criterion_reduced_authority());
  }
  if (info) {
    results.push_back(criterion_information_level());
  }
  if (properties) {
    results.push_back(criterion_allocation());
    results.push_back(criterion_analytic_derivatives());
    results.push_back(criterion_proposition1_sweep());
  }
  return results;
}

bool report(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all_pass = true;
  for (const CriterionResult& r : results) {
    out << r.id << " " << (r.pass ? "PASS" : "FAIL") << " measured="
        << r.measured << " bound=" << r.bound << " | " << r.description;
    if (!r.detail.empty()) out << " | " << r.detail;
    out << "\n";
    all_pass = all_pass && r.pass;
  }
  out << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << " (" << results.size()
      << " criteria)\n";
  return all_pass;
}

}  // namespace acceptance
}  // namespace pursuit
