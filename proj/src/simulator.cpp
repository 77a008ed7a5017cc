#include "pursuit/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pursuit/scenario.hpp"

namespace pursuit {

void SimConfig::validate(double t_star, double t1, double t2) const {
  if (dt <= 0.0) throw ConfigError("SimConfig: dt <= 0");
  if (capture_radius <= 0.0) throw ConfigError("SimConfig: capture_radius <= 0");
  if (evader_loss_radius <= 0.0) {
    throw ConfigError("SimConfig: evader_loss_radius <= 0");
  }
  if (decimation < 1) throw ConfigError("SimConfig: decimation < 1");
  const double horizon = std::max(t_star, std::max(t1, t2));
  if (t_max <= horizon) {
    throw ConfigError("SimConfig: t_max must exceed max(t_star, t1, t2)");
  }
}

namespace {

struct Deriv {
  double dx, dy, dgamma;
};

Deriv agent_deriv(double v, double gamma, double accel) {
  return {v * std::cos(gamma), v * std::sin(gamma), accel / v};
}

}  // namespace

AgentState advance_agent(const AgentState& a, double accel, double dt,
                         IntegratorKind kind) {
  AgentState out = a;
  if (kind == IntegratorKind::euler) {
    const Deriv d = agent_deriv(a.v, a.gamma, accel);
    out.x += dt * d.dx;
    out.y += dt * d.dy;
    out.gamma = wrap_pi(a.gamma + dt * d.dgamma);
    return out;
  }
  const Deriv k1 = agent_deriv(a.v, a.gamma, accel);
  const Deriv k2 = agent_deriv(a.v, a.gamma + 0.5 * dt * k1.dgamma, accel);
  const Deriv k3 = agent_deriv(a.v, a.gamma + 0.5 * dt * k2.dgamma, accel);
  const Deriv k4 = agent_deriv(a.v, a.gamma + dt * k3.dgamma, accel);
  out.x += dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
  out.y += dt / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy);
  out.gamma = wrap_pi(a.gamma + dt / 6.0 * (k1.dgamma + 2.0 * k2.dgamma +
                                            2.0 * k3.dgamma + k4.dgamma));
  return out;
}

EngagementState step(const EngagementState& s, const GuidanceCommand& cmd,
                     double dt, IntegratorKind kind) {
  if (dt <= 0.0) throw ConfigError("step: dt <= 0");
  const AgentState p = advance_agent(s.pursuer, cmd.a_p, dt, kind);
  const AgentState e = advance_agent(s.evader, cmd.a_e, dt, kind);
  const AgentState d = advance_agent(s.defender, cmd.a_d, dt, kind);
  for (const AgentState* a : {&p, &e, &d}) {
    if (!std::isfinite(a->x) || !std::isfinite(a->y) ||
        !std::isfinite(a->gamma)) {
      throw NumericalDivergenceError("step: non-finite agent state");
    }
  }
  const double chi_star = wrap_two_pi(s.chi - s.beta);
  return make_engagement(p, e, d, chi_star, s.t + dt);
}

bool detect_event(const EngagementState& s, const SimConfig& cfg,
                  EventKind& kind_out) {
  if (s.dp.r <= cfg.capture_radius) {
    kind_out = EventKind::defender_captures_pursuer;
    return true;
  }
  if (s.ep.r <= cfg.evader_loss_radius) {
    kind_out = EventKind::pursuer_captures_evader;
    return true;
  }
  return false;
}

namespace {

constexpr int kMaxDegenerateHolds = 10;

TraceRow make_row(const EngagementState& s, const GuidanceCommand& cmd,
                  const CooperativeController::StepInfo& info) {
  TraceRow row;
  row.t = s.t;
  row.pursuer = s.pursuer;
  row.evader = s.evader;
  row.defender = s.defender;
  row.cmd = cmd;
  row.ep = s.ep;
  row.dp = s.dp;
  row.ed = s.ed;
  row.chi = s.chi;
  row.beta = s.beta;
  row.s_inner = info.s_inner;
  row.s_outer = info.s_outer;
  row.s_e = info.s_e;
  return row;
}

// First fraction s in [0, 1] at which the linearly interpolated separation of
// the pair (a, b) crosses the radius during one step. Checking only the step
// endpoints can miss a close approach: at coarse dt the relative motion per
// step can exceed the radius, so the pair may pass through the capture disk
// between samples.
bool segment_crossing(const AgentState& a0, const AgentState& b0,
                      const AgentState& a1, const AgentState& b1,
                      double radius, double& s_out) {
  const double p0x = b0.x - a0.x, p0y = b0.y - a0.y;
  const double p1x = b1.x - a1.x, p1y = b1.y - a1.y;
  const double dx = p1x - p0x, dy = p1y - p0y;
  const double c = p0x * p0x + p0y * p0y - radius * radius;
  if (c <= 0.0) {
    s_out = 0.0;
    return true;
  }
  const double dd = dx * dx + dy * dy;
  const double pd = p0x * dx + p0y * dy;
  const double disc = pd * pd - dd * c;
  if (dd <= 0.0 || disc < 0.0) return false;
  const double s = (-pd - std::sqrt(disc)) / dd;
  if (s < 0.0 || s > 1.0) return false;
  s_out = s;
  return true;
}

}  // namespace

SimulationTrace run(const ScenarioConfig& scenario) {
  scenario.validate();
  const SimConfig& sim = scenario.sim;

  SimulationTrace trace;
  EngagementState state = scenario.initial_engagement();
  CooperativeController controller(scenario.guidance, scenario.law,
                                   scenario.lim_p, scenario.lim_e,
                                   scenario.lim_d, state, sim.dt);

  double min_r_ep = state.ep.r;
  GuidanceCommand last_cmd;
  std::size_t step_index = 0;
  bool pending = false;
  EventKind pending_kind = EventKind::timeout;
  double pending_t_f = 0.0;

  while (true) {
    min_r_ep = std::min(min_r_ep, state.ep.r);

    EventKind kind;
    if (pending || detect_event(state, sim, kind)) {
      if (pending) kind = pending_kind;
      CooperativeController::StepInfo info;
      info.s_inner = inner_manifold(
          state.beta_dot(),
          g_value(controller.beta_profile(), state.beta, state.t));
      info.s_outer = outer_manifold(
          info.s_inner, h_value(controller.reaching_profile(), state.t));
      info.s_e = controller.decoy_profile()
                     ? decoy_manifold(state.ep.lambda_dot,
                                      hE_value(*controller.decoy_profile(),
                                               state.t))
                     : std::numeric_limits<double>::quiet_NaN();
      trace.rows.push_back(make_row(state, last_cmd, info));
      trace.event.kind = kind;
      trace.event.t_f = pending ? pending_t_f : state.t;
      trace.event.r_ep_at_tf = state.ep.r;
      trace.event.min_r_ep = min_r_ep;
      return trace;
    }
    if (state.t >= sim.t_max) {
      trace.event = {EventKind::timeout, state.t, state.ep.r, min_r_ep};
      return trace;
    }

    CooperativeController::StepInfo info;
    try {
      info = controller.compute(state);
    } catch (const SingularGeometryError&) {
      trace.event = {EventKind::degenerate_geometry_abort, state.t, state.ep.r,
                     min_r_ep};
      return trace;
    }
    if (info.fallback_allocation) ++trace.fallback_allocations;
    if (info.degenerate_hold) ++trace.degenerate_holds;
    if (controller.hold_streak() > kMaxDegenerateHolds) {
      trace.event = {EventKind::degenerate_geometry_abort, state.t, state.ep.r,
                     min_r_ep};
      return trace;
    }

    if (step_index % static_cast<std::size_t>(sim.decimation) == 0) {
      trace.rows.push_back(make_row(state, info.cmd, info));
    }

    const EngagementState prev = state;
    last_cmd = info.cmd;
    try {
      state = step(state, info.cmd, sim.dt, sim.integrator);
    } catch (const NumericalDivergenceError&) {
      trace.event = {EventKind::degenerate_geometry_abort, state.t, state.ep.r,
                     min_r_ep};
      return trace;
    }
    ++step_index;

    // Resolve capture events on the step segment; the earlier crossing wins,
    // with an exact tie resolved in the defender's favor.
    double s_dp = 0.0, s_ep = 0.0;
    const bool hit_dp =
        segment_crossing(prev.defender, prev.pursuer, state.defender,
                         state.pursuer, sim.capture_radius, s_dp);
    const bool hit_ep =
        segment_crossing(prev.evader, prev.pursuer, state.evader,
                         state.pursuer, sim.evader_loss_radius, s_ep);
    if (hit_dp && (!hit_ep || s_dp <= s_ep)) {
      pending = true;
      pending_kind = EventKind::defender_captures_pursuer;
      pending_t_f = prev.t + s_dp * sim.dt;
    } else if (hit_ep) {
      pending = true;
      pending_kind = EventKind::pursuer_captures_evader;
      pending_t_f = prev.t + s_ep * sim.dt;
    }
  }
}

}  // namespace pursuit
