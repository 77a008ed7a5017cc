#include "pursuit/engagement.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace pursuit {

PairState pair_kinematics(const AgentState& a, const AgentState& b) {
  const Eigen::Vector2d rel(b.x - a.x, b.y - a.y);
  const double r = rel.norm();
  if (r < kMinRange) {
    throw SingularGeometryError("pair_kinematics: coincident agent positions");
  }
  PairState p;
  p.r = r;
  p.lambda = std::atan2(rel.y(), rel.x());
  p.delta_first = wrap_pi(a.gamma - p.lambda);
  p.delta_second = wrap_pi(b.gamma - p.lambda);
  p.r_dot = b.v * std::cos(p.delta_second) - a.v * std::cos(p.delta_first);
  p.lambda_dot =
      (b.v * std::sin(p.delta_second) - a.v * std::sin(p.delta_first)) / r;
  return p;
}

double chi_angle(double lambda_dp, double lambda_ed) {
  return wrap_two_pi(kPi + lambda_dp - lambda_ed);
}

double beta_error(double chi, double chi_star) {
  if (chi_star < kPi / 2.0 - 1e-12 || chi_star > 3.0 * kPi / 2.0 + 1e-12) {
    throw InvalidTargetAngleError(
        "beta_error: chi_star outside [pi/2, 3pi/2]");
  }
  return wrap_pi(chi - chi_star);
}

EngagementState make_engagement(const AgentState& pursuer,
                                const AgentState& evader,
                                const AgentState& defender, double chi_star,
                                double t) {
  EngagementState s;
  s.pursuer = pursuer;
  s.evader = evader;
  s.defender = defender;
  s.ep = pair_kinematics(evader, pursuer);
  s.dp = pair_kinematics(defender, pursuer);
  s.ed = pair_kinematics(evader, defender);
  s.chi = chi_angle(s.dp.lambda, s.ed.lambda);
  s.beta = beta_error(s.chi, chi_star);
  s.t = t;
  return s;
}

double los_accel_dp(const EngagementState& s, double a_p, double a_d) {
  if (s.dp.r < kMinRange) {
    throw SingularGeometryError("los_accel_dp: r_DP not positive");
  }
  return -2.0 * s.dp.r_dot * s.dp.lambda_dot / s.dp.r +
         std::cos(s.dp.delta_second) / s.dp.r * a_p -
         std::cos(s.dp.delta_first) / s.dp.r * a_d;
}

double los_accel_ed(const EngagementState& s, double a_e, double a_d) {
  if (s.ed.r < kMinRange) {
    throw SingularGeometryError("los_accel_ed: r_ED not positive");
  }
  return -2.0 * s.ed.r_dot * s.ed.lambda_dot / s.ed.r -
         std::cos(s.ed.delta_first) / s.ed.r * a_e +
         std::cos(s.ed.delta_second) / s.ed.r * a_d;
}

double los_accel_ep(const EngagementState& s, double a_p, double a_e) {
  if (s.ep.r < kMinRange) {
    throw SingularGeometryError("los_accel_ep: r_EP not positive");
  }
  return -2.0 * s.ep.r_dot * s.ep.lambda_dot / s.ep.r +
         std::cos(s.ep.delta_second) / s.ep.r * a_p -
         std::cos(s.ep.delta_first) / s.ep.r * a_e;
}

double beta_accel(const EngagementState& s, double a_p, double a_e,
                  double a_d) {
  return los_accel_dp(s, a_p, a_d) - los_accel_ed(s, a_e, a_d);
}

}  // namespace pursuit
