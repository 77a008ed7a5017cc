#include "pursuit/guidance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pursuit {

namespace {
constexpr double kEpsCos = 1e-3;
// Heading-error gain [1/s] of the terminal pursuit term and the closing
// speed [m/s] below which it fades in. PN alone stalls when the closing
// speed collapses; the pursuit term must stay out of fast approaches where
// it would erase the PN lead angle.
constexpr double kTerminalPursuitGain = 2.0;
constexpr double kTerminalGateSpeed = 50.0;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double b1_coeff(const EngagementState& s) {
  return std::cos(s.ed.delta_first) / s.ed.r;  // cos(delta_ED)/r_ED
}

double b2_coeff(const EngagementState& s) {
  return std::cos(s.ed.delta_second) / s.ed.r +
         std::cos(s.dp.delta_first) / s.dp.r;
}
}  // namespace

void GuidanceConfig::validate() const {
  if (chi_star < kPi / 2.0 - 1e-12 || chi_star > 3.0 * kPi / 2.0 + 1e-12) {
    throw ConfigError("GuidanceConfig: chi_star outside [pi/2, 3pi/2]");
  }
  if (t_star <= 0.0) throw ConfigError("GuidanceConfig: t_star <= 0");
  if (t1 <= 0.0 || t1 >= t_star) {
    throw ConfigError("GuidanceConfig: t1 must satisfy 0 < t1 < t_star");
  }
  if (k1 < 1 || k2 < 1) throw ConfigError("GuidanceConfig: k1, k2 must be >= 1");
  if (K <= 0.0) throw ConfigError("GuidanceConfig: K <= 0");
  if (sigma <= 0.0) throw ConfigError("GuidanceConfig: sigma <= 0");
  if (boundary_layer <= 0.0) {
    throw ConfigError("GuidanceConfig: boundary_layer <= 0");
  }
  if (terminal_handoff_radius < 0.0) {
    throw ConfigError("GuidanceConfig: terminal_handoff_radius < 0");
  }
  if (terminal_nav_constant <= 0.0) {
    throw ConfigError("GuidanceConfig: terminal_nav_constant <= 0");
  }
  if (mode == CooperationMode::information_level) {
    if (t2 <= 0.0) throw ConfigError("GuidanceConfig: t2 <= 0");
    if (k3 < 1) throw ConfigError("GuidanceConfig: k3 < 1");
    if (K1 <= 0.0) throw ConfigError("GuidanceConfig: K1 <= 0");
  }
}

double saturate(double raw, const AgentLimits& limits) {
  return std::clamp(raw, -limits.a_max, limits.a_max);
}

double switching_function(double s, SwitchingKind kind, double phi) {
  if (kind == SwitchingKind::sign) {
    return s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0);
  }
  return std::clamp(s / phi, -1.0, 1.0);
}

double pursuer_command(const PursuerLaw& law, const EngagementState& s,
                       double a_e_observed) {
  if (s.ep.r < kMinRange) {
    throw SingularGeometryError("pursuer_command: r_EP not positive");
  }
  const double gamma_p = s.pursuer.gamma;
  switch (law.kind) {
    case PursuerLawKind::png:
      return -law.nav_constant * s.ep.r_dot * s.ep.lambda_dot;
    case PursuerLawKind::ppg:
      return s.pursuer.v * s.ep.lambda_dot -
             law.pursuit_gain * wrap_pi(gamma_p - s.ep.lambda);
    case PursuerLawKind::dpg:
      return s.pursuer.v * s.ep.lambda_dot -
             law.pursuit_gain * wrap_pi(gamma_p - s.ep.lambda - law.deviation);
    case PursuerLawKind::bpng: {
      // Feedforward of the observed evader command scaled so that it cancels
      // the evader's contribution to lambda_ddot_EP.
      const double cos_pe = std::cos(s.ep.delta_second);
      double bias = 0.0;
      if (std::abs(cos_pe) > kEpsCos) {
        bias = law.bias_gain * std::cos(s.ep.delta_first) / cos_pe *
               a_e_observed;
      }
      return -law.nav_constant * s.ep.r_dot * s.ep.lambda_dot + bias;
    }
  }
  return 0.0;
}

double joint_cooperative_command(const EngagementState& s,
                                 const GuidanceConfig& cfg,
                                 const PrescribedTimeProfile& gp,
                                 const ReachingEliminationProfile& hp,
                                 double phi) {
  if (s.dp.r < kMinRange || s.ed.r < kMinRange) {
    throw SingularGeometryError("joint_cooperative_command: degenerate range");
  }
  const double beta_dot = s.beta_dot();
  const double g = g_value(gp, s.beta, s.t);
  const double s_inner = inner_manifold(beta_dot, g);
  const double s_outer = outer_manifold(s_inner, h_value(hp, s.t));
  return 2.0 * s.dp.r_dot * s.dp.lambda_dot / s.dp.r -
         2.0 * s.ed.r_dot * s.ed.lambda_dot / s.ed.r +
         g_rate(gp, s.beta, beta_dot, s.t) - h_rate(hp, s.t) -
         cfg.K * switching_function(s_outer, cfg.switching, phi);
}

Allocation allocate(double u, const EngagementState& s, double sigma) {
  if (s.dp.r < kMinRange || s.ed.r < kMinRange) {
    throw SingularGeometryError("allocate: degenerate range");
  }
  if (std::abs(std::cos(s.ed.delta_first)) < kEpsCos) {
    throw DegenerateAllocationError(
        "allocate: cos(delta_ED) near zero, evader command unbounded");
  }
  const double b1 = b1_coeff(s);
  const double b2 = b2_coeff(s);
  Allocation out;
  out.a_d = -b2 * u / (b1 * b1 * sigma * sigma + b2 * b2);
  out.a_e = (u + b2 * out.a_d) / b1;
  return out;
}

Allocation allocate_defender_only(double u, const EngagementState& s) {
  const double b2 = b2_coeff(s);
  if (std::abs(b2) * s.ed.r < kEpsCos) {
    throw DegenerateAllocationError(
        "allocate_defender_only: B2 near zero");
  }
  return Allocation{0.0, -u / b2};
}

double decoy_command(const EngagementState& s, const GuidanceConfig& cfg,
                     const DecoyProfile& dp, double phi) {
  if (s.ep.r < kMinRange) {
    throw SingularGeometryError("decoy_command: r_EP not positive");
  }
  const double cos_ep = std::cos(s.ep.delta_first);
  if (std::abs(cos_ep) < kEpsCos) {
    throw DegenerateGeometryError("decoy_command: cos(delta_EP) near zero");
  }
  const double s_e =
      decoy_manifold(s.ep.lambda_dot, hE_value(dp, s.t));
  return s.ep.r / cos_ep *
         (-2.0 * s.ep.r_dot * s.ep.lambda_dot / s.ep.r + hE_rate(dp, s.t) +
          cfg.K1 * switching_function(s_e, cfg.switching, phi));
}

double defender_command_info(const EngagementState& s,
                             const GuidanceConfig& cfg,
                             const PrescribedTimeProfile& gp,
                             const ReachingEliminationProfile& hp,
                             double a_e_observed, double phi) {
  if (s.dp.r < kMinRange || s.ed.r < kMinRange) {
    throw SingularGeometryError("defender_command_info: degenerate range");
  }
  // Denominator is B2 * r_ED * r_DP; the affine constraint fixes its sign.
  const double den = std::cos(s.ed.delta_second) * s.dp.r +
                     std::cos(s.dp.delta_first) * s.ed.r;
  if (std::abs(den) < kEpsCos * std::max(s.dp.r, s.ed.r)) {
    throw DegenerateGeometryError(
        "defender_command_info: denominator near zero");
  }
  const double beta_dot = s.beta_dot();
  const double g = g_value(gp, s.beta, s.t);
  const double s_outer =
      outer_manifold(inner_manifold(beta_dot, g), h_value(hp, s.t));
  const double bracket =
      -2.0 * s.dp.r_dot * s.dp.lambda_dot / s.dp.r +
      2.0 * s.ed.r_dot * s.ed.lambda_dot / s.ed.r +
      std::cos(s.ed.delta_first) / s.ed.r * a_e_observed -
      g_rate(gp, s.beta, beta_dot, s.t) + h_rate(hp, s.t) +
      cfg.K * switching_function(s_outer, cfg.switching, phi);
  return bracket * s.ed.r * s.dp.r / den;
}

CooperativeController::CooperativeController(
    const GuidanceConfig& cfg, const PursuerLaw& law, const AgentLimits& lim_p,
    const AgentLimits& lim_e, const AgentLimits& lim_d,
    const EngagementState& initial, double dt)
    : cfg_(cfg),
      law_(law),
      lim_p_(lim_p),
      lim_e_(lim_e),
      lim_d_(lim_d),
      gp_(cfg.t_star, cfg.k1, dt),
      hp_(cfg.t1, cfg.k2,
          -inner_manifold(initial.beta_dot(),
                          g_value(PrescribedTimeProfile(cfg.t_star, cfg.k1, dt),
                                  initial.beta, initial.t))),
      phi_(std::max(cfg.boundary_layer, cfg.K * dt)),
      phi_decoy_(std::max(cfg.boundary_layer, cfg.K1 * dt)) {
  cfg_.validate();
  if (cfg.mode == CooperationMode::information_level) {
    decoy_.emplace(cfg.t2, cfg.k3, -initial.ep.lambda_dot);
  }
}

CooperativeController::StepInfo CooperativeController::compute(
    const EngagementState& s) {
  StepInfo info;
  const double g = g_value(gp_, s.beta, s.t);
  info.s_inner = inner_manifold(s.beta_dot(), g);
  info.s_outer = outer_manifold(info.s_inner, h_value(hp_, s.t));
  info.s_e = kNaN;

  GuidanceCommand& cmd = info.cmd;
  const bool terminal = cfg_.terminal_handoff_radius > 0.0 &&
                        s.dp.r < cfg_.terminal_handoff_radius;
  if (terminal) {
    // Terminal homing: the angle law cannot correct the residual miss once
    // r_DP is small (the demanded LOS rate is unbounded), so the defender
    // switches to proportional navigation on the defender-pursuer pair,
    // augmented by a pursuit term that keeps its velocity on the LOS. The
    // pursuit term carries the endgame when the closing speed collapses
    // (equal-speed tail chase), where plain PN commands vanish.
    cmd.u = kNaN;
    const double closing_gate =
        std::max(0.0, 1.0 - std::abs(s.dp.r_dot) / kTerminalGateSpeed);
    cmd.raw_a_d =
        -cfg_.terminal_nav_constant * s.dp.r_dot * s.dp.lambda_dot +
        closing_gate * kTerminalPursuitGain * s.defender.v *
            wrap_pi(s.dp.lambda - s.defender.gamma);
    if (cfg_.mode == CooperationMode::maneuver_level ||
        cfg_.evader_passive) {
      cmd.raw_a_e = 0.0;
    } else {
      info.s_e = decoy_manifold(s.ep.lambda_dot, hE_value(*decoy_, s.t));
      try {
        cmd.raw_a_e = decoy_command(s, cfg_, *decoy_, phi_decoy_);
      } catch (const DegenerateGeometryError&) {
        cmd.raw_a_e = last_a_e_;
      }
    }
    hold_streak_ = 0;
  } else if (cfg_.mode == CooperationMode::maneuver_level) {
    cmd.u = joint_cooperative_command(s, cfg_, gp_, hp_, phi_);
    Allocation alloc;
    if (cfg_.evader_passive) {
      try {
        alloc = allocate_defender_only(cmd.u, s);
      } catch (const DegenerateAllocationError&) {
        // Defender momentarily unable to influence beta; coast one step.
        alloc = Allocation{0.0, 0.0};
        info.fallback_allocation = true;
      }
    } else {
      try {
        alloc = allocate(cmd.u, s, cfg_.sigma);
      } catch (const DegenerateAllocationError&) {
        // The evader's lever arm on beta has vanished. Hold its last command
        // so its heading keeps rotating out of the degeneracy, and let the
        // defender absorb the remainder of the joint command.
        const double a_e_held = last_a_e_;
        const double b1 = std::cos(s.ed.delta_first) / s.ed.r;
        try {
          alloc = allocate_defender_only(cmd.u - b1 * a_e_held, s);
          alloc.a_e = a_e_held;
        } catch (const DegenerateAllocationError&) {
          alloc = Allocation{a_e_held, 0.0};
        }
        info.fallback_allocation = true;
      }
    }
    cmd.raw_a_e = alloc.a_e;
    cmd.raw_a_d = alloc.a_d;
    hold_streak_ = 0;
  } else {
    cmd.u = kNaN;
    info.s_e = decoy_manifold(s.ep.lambda_dot, hE_value(*decoy_, s.t));
    bool held = false;
    if (cfg_.evader_passive) {
      cmd.raw_a_e = 0.0;
    } else {
      try {
        cmd.raw_a_e = decoy_command(s, cfg_, *decoy_, phi_decoy_);
      } catch (const DegenerateGeometryError&) {
        cmd.raw_a_e = last_a_e_;
        held = true;
      }
    }
    const double a_e_applied = saturate(cmd.raw_a_e, lim_e_);
    try {
      cmd.raw_a_d =
          defender_command_info(s, cfg_, gp_, hp_, a_e_applied, phi_);
    } catch (const DegenerateGeometryError&) {
      cmd.raw_a_d = last_a_d_;
      held = true;
    }
    info.degenerate_hold = held;
    hold_streak_ = held ? hold_streak_ + 1 : 0;
  }

  cmd.a_e = saturate(cmd.raw_a_e, lim_e_);
  cmd.a_d = saturate(cmd.raw_a_d, lim_d_);
  cmd.raw_a_p = pursuer_command(law_, s, cmd.a_e);
  cmd.a_p = saturate(cmd.raw_a_p, lim_p_);
  last_a_e_ = cmd.a_e;
  last_a_d_ = cmd.a_d;
  return info;
}

}  // namespace pursuit
