#pragma once

#include <stdexcept>
#include <string>

#include "pursuit/angles.hpp"

namespace pursuit {

// Ranges below this are treated as coincident agents.
inline constexpr double kMinRange = 1e-6;

struct SingularGeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidTargetAngleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateAllocationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateGeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalDivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Planar pose of one agent. Speed is constant per run; heading is kept in
/// (-pi, pi].
struct AgentState {
  double x = 0.0;      // m
  double y = 0.0;      // m
  double v = 1.0;      // m/s, > 0
  double gamma = 0.0;  // rad, (-pi, pi]

  double vx() const { return v * std::cos(gamma); }
  double vy() const { return v * std::sin(gamma); }
};

struct AgentLimits {
  double a_max = 1.0;  // m/s^2, > 0
};

/// Relative state of an agent pair. The first-named agent sits at the LOS
/// origin; lambda is the LOS angle from it toward the second agent.
struct PairState {
  double r = 0.0;             // m, > 0
  double lambda = 0.0;        // rad, (-pi, pi]
  double r_dot = 0.0;         // m/s
  double lambda_dot = 0.0;    // rad/s
  double delta_first = 0.0;   // lead angle of the first-named agent, rad
  double delta_second = 0.0;  // lead angle of the second-named agent, rad
};

/// Full three-body snapshot at time t. chi and beta are kept consistent with
/// the pair states: chi = wrap_[0,2pi)(pi + lambda_DP - lambda_ED),
/// beta = wrap_(-pi,pi](chi - chi_star).
struct EngagementState {
  AgentState pursuer;
  AgentState evader;
  AgentState defender;
  PairState ep;  // evader -> pursuer
  PairState dp;  // defender -> pursuer
  PairState ed;  // evader -> defender
  double chi = 0.0;   // rad, [0, 2pi)
  double beta = 0.0;  // rad, (-pi, pi]
  double t = 0.0;     // s

  /// beta_dot = lambda_dot_DP - lambda_dot_ED
  double beta_dot() const { return dp.lambda_dot - ed.lambda_dot; }
};

}  // namespace pursuit
