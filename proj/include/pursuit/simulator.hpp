#pragma once

#include <cstddef>
#include <vector>

#include "pursuit/guidance.hpp"
#include "pursuit/types.hpp"

namespace pursuit {

enum class IntegratorKind { rk4, euler };

struct SimConfig {
  double dt = 1e-3;              // s
  double t_max = 30.0;           // s
  double capture_radius = 1.0;   // m, defender-pursuer
  double evader_loss_radius = 1.0;  // m, evader-pursuer
  IntegratorKind integrator = IntegratorKind::rk4;
  int decimation = 1;  // record every n-th step

  void validate(double t_star, double t1, double t2) const;
};

enum class EventKind {
  defender_captures_pursuer,
  pursuer_captures_evader,
  timeout,
  degenerate_geometry_abort,
};

struct TerminalEvent {
  EventKind kind = EventKind::timeout;
  double t_f = 0.0;
  double r_ep_at_tf = 0.0;
  double min_r_ep = 0.0;
};

struct TraceRow {
  double t = 0.0;
  AgentState pursuer, evader, defender;
  GuidanceCommand cmd;
  PairState ep, dp, ed;
  double chi = 0.0, beta = 0.0;
  double s_inner = 0.0, s_outer = 0.0, s_e = 0.0;  // s_e NaN when n/a
};

struct SimulationTrace {
  std::vector<TraceRow> rows;
  TerminalEvent event;
  std::size_t fallback_allocations = 0;
  std::size_t degenerate_holds = 0;
};

/// Advances one agent under a constant lateral acceleration.
AgentState advance_agent(const AgentState& a, double accel, double dt,
                         IntegratorKind kind);

/// Integrates all three agents over one step with commands held constant,
/// then rebuilds the engagement snapshot. Throws NumericalDivergenceError on
/// non-finite states.
EngagementState step(const EngagementState& s, const GuidanceCommand& cmd,
                     double dt, IntegratorKind kind = IntegratorKind::rk4);

/// Terminal-event predicate; defender capture wins a same-step tie.
bool detect_event(const EngagementState& s, const SimConfig& cfg,
                  EventKind& kind_out);

struct ScenarioConfig;  // see scenario.hpp

SimulationTrace run(const ScenarioConfig& scenario);

}  // namespace pursuit
