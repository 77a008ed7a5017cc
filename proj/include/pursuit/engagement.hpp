#pragma once

#include "pursuit/types.hpp"

namespace pursuit {

/// Relative-motion kinematics of the pair (a, b), with a at the LOS origin.
/// Throws SingularGeometryError if the positions coincide.
PairState pair_kinematics(const AgentState& a, const AgentState& b);

/// chi = wrap_[0,2pi)(pi + lambda_DP - lambda_ED), the angle subtended at the
/// defender between the evader-defender and defender-pursuer lines.
double chi_angle(double lambda_dp, double lambda_ed);

/// beta = wrap_(-pi,pi](chi - chi_star). chi_star must lie in [pi/2, 3pi/2].
double beta_error(double chi, double chi_star);

/// Assembles the full engagement snapshot from the three agent states.
EngagementState make_engagement(const AgentState& pursuer,
                                const AgentState& evader,
                                const AgentState& defender, double chi_star,
                                double t);

/// LOS angular accelerations, affine in the steering controls.
double los_accel_dp(const EngagementState& s, double a_p, double a_d);
double los_accel_ed(const EngagementState& s, double a_e, double a_d);
double los_accel_ep(const EngagementState& s, double a_p, double a_e);

/// beta_ddot = lambda_ddot_DP - lambda_ddot_ED.
double beta_accel(const EngagementState& s, double a_p, double a_e, double a_d);

}  // namespace pursuit
