#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "pursuit/engagement.hpp"

using namespace pursuit;

namespace {

AgentState agent(double x, double y, double v, double gamma_deg) {
  return {x, y, v, deg_to_rad(gamma_deg)};
}

std::mt19937 rng(42);

AgentState random_agent(double span) {
  std::uniform_real_distribution<double> pos(-span, span);
  std::uniform_real_distribution<double> speed(50.0, 300.0);
  std::uniform_real_distribution<double> head(-kPi, kPi);
  return {pos(rng), pos(rng), speed(rng), head(rng)};
}

}  // namespace

TEST_CASE("pair kinematics: head-on closing") {
  const AgentState e = agent(0, 0, 100, 0);
  const AgentState p = agent(5000, 0, 200, 180);
  const PairState ep = pair_kinematics(e, p);
  CHECK(ep.r == doctest::Approx(5000.0));
  CHECK(ep.lambda == doctest::Approx(0.0));
  CHECK(ep.r_dot == doctest::Approx(-300.0));
  CHECK(ep.lambda_dot == doctest::Approx(0.0));
}

TEST_CASE("pair kinematics: crossing pursuer") {
  const AgentState e = agent(0, 0, 100, 0);
  const AgentState p = agent(5000, 0, 200, 90);
  const PairState ep = pair_kinematics(e, p);
  CHECK(ep.r_dot == doctest::Approx(-100.0));
  CHECK(ep.lambda_dot == doctest::Approx(0.04));
}

TEST_CASE("pair kinematics: coincident positions throw") {
  const AgentState a = agent(10, 10, 100, 0);
  const AgentState b = agent(10, 10, 200, 90);
  CHECK_THROWS_AS(pair_kinematics(a, b), SingularGeometryError);
}

TEST_CASE("pair kinematics: velocity-projection identity") {
  for (int i = 0; i < 50; ++i) {
    const AgentState a = random_agent(2000.0);
    AgentState b = random_agent(2000.0);
    if (std::hypot(b.x - a.x, b.y - a.y) < 1.0) b.x += 10.0;
    const PairState ps = pair_kinematics(a, b);
    const double ux = std::cos(ps.lambda), uy = std::sin(ps.lambda);
    const double rvx = b.vx() - a.vx(), rvy = b.vy() - a.vy();
    CHECK(ps.r_dot == doctest::Approx(rvx * ux + rvy * uy).epsilon(1e-12));
    CHECK(ps.r * ps.lambda_dot ==
          doctest::Approx(-rvx * uy + rvy * ux).epsilon(1e-12));
  }
}

TEST_CASE("pair kinematics: order-swap symmetry") {
  // Swapping the pair order rotates the LOS by pi; r, r_dot and lambda_dot
  // are invariant (lambda_dot differentiates lambda + pi).
  for (int i = 0; i < 50; ++i) {
    const AgentState a = random_agent(2000.0);
    AgentState b = random_agent(2000.0);
    if (std::hypot(b.x - a.x, b.y - a.y) < 1.0) b.x += 10.0;
    const PairState ab = pair_kinematics(a, b);
    const PairState ba = pair_kinematics(b, a);
    CHECK(ba.r == doctest::Approx(ab.r).epsilon(1e-12));
    CHECK(ba.r_dot == doctest::Approx(ab.r_dot).epsilon(1e-12));
    CHECK(wrap_pi(ba.lambda - ab.lambda - kPi) == doctest::Approx(0.0));
    CHECK(ba.lambda_dot == doctest::Approx(ab.lambda_dot).epsilon(1e-12));
  }
}

TEST_CASE("chi angle") {
  SUBCASE("baseline geometry gives 228 deg") {
    const double lambda_dp = std::atan2(0.0 - (-282.84), 5000.0 - 282.84);
    const double chi = chi_angle(lambda_dp, deg_to_rad(-45.0));
    CHECK(rad_to_deg(chi) == doctest::Approx(228.43).epsilon(1e-3));
  }
  SUBCASE("equal LOS angles give 180 deg") {
    CHECK(chi_angle(0.7, 0.7) == doctest::Approx(kPi));
  }
  SUBCASE("wraps into [0, 2pi)") {
    const double chi = chi_angle(deg_to_rad(170.0), deg_to_rad(-30.0));
    CHECK(rad_to_deg(chi) == doctest::Approx(20.0));
  }
}

TEST_CASE("beta error") {
  CHECK(rad_to_deg(beta_error(deg_to_rad(228.0), deg_to_rad(180.0))) ==
        doctest::Approx(48.0));
  CHECK(beta_error(1.9, 1.9) == doctest::Approx(0.0));
  CHECK(rad_to_deg(beta_error(deg_to_rad(10.0), deg_to_rad(190.0))) ==
        doctest::Approx(180.0));
  CHECK_THROWS_AS(beta_error(kPi, deg_to_rad(60.0)), InvalidTargetAngleError);
}

TEST_CASE("LOS accelerations: direct substitutions") {
  EngagementState s;
  s.dp.r = 1000.0;
  s.dp.r_dot = -400.0;
  s.dp.lambda_dot = 0.01;
  CHECK(los_accel_dp(s, 0.0, 0.0) == doctest::Approx(0.008));

  EngagementState s2;
  s2.ed.r = 400.0;
  s2.ed.lambda_dot = 0.0;
  s2.ed.delta_second = 0.0;  // defender lead angle
  s2.ed.delta_first = 0.3;
  CHECK(los_accel_ed(s2, 0.0, 98.1) == doctest::Approx(0.245).epsilon(1e-3));

  EngagementState s3;
  s3.ep.r = 1000.0;
  s3.ep.r_dot = -400.0;
  s3.ep.lambda_dot = 0.01;
  CHECK(los_accel_ep(s3, 0.0, 0.0) == doctest::Approx(0.008));
}

TEST_CASE("LOS accelerations vanish with zero rates and commands") {
  EngagementState s;
  s.dp.r = s.ed.r = s.ep.r = 500.0;
  CHECK(los_accel_dp(s, 0.0, 0.0) == 0.0);
  CHECK(los_accel_ed(s, 0.0, 0.0) == 0.0);
  CHECK(los_accel_ep(s, 0.0, 0.0) == 0.0);
}

TEST_CASE("beta_accel is the DP/ED difference and affine in a_P") {
  std::uniform_real_distribution<double> acc(-150.0, 150.0);
  for (int i = 0; i < 50; ++i) {
    const AgentState p = random_agent(5000.0);
    const AgentState e = random_agent(500.0);
    const AgentState d = random_agent(800.0);
    EngagementState s;
    try {
      s = make_engagement(p, e, d, kPi, 0.0);
    } catch (const SingularGeometryError&) {
      continue;
    }
    const double a_p = acc(rng), a_e = acc(rng), a_d = acc(rng);
    CHECK(beta_accel(s, a_p, a_e, a_d) ==
          doctest::Approx(los_accel_dp(s, a_p, a_d) -
                          los_accel_ed(s, a_e, a_d))
              .epsilon(1e-12));
    // Slope in a_P is cos(delta_PD)/r_DP.
    const double slope =
        (beta_accel(s, a_p, a_e, a_d) - beta_accel(s, 0.0, a_e, a_d)) / a_p;
    CHECK(slope ==
          doctest::Approx(std::cos(s.dp.delta_second) / s.dp.r).epsilon(1e-9));
  }
}

TEST_CASE("make_engagement keeps chi and beta consistent") {
  const AgentState p = agent(5000, 0, 200, 180);
  const AgentState e = agent(0, 0, 100, 45);
  const AgentState d = agent(282.84, -282.84, 200, 0);
  const EngagementState s = make_engagement(p, e, d, kPi, 0.0);
  CHECK(s.chi ==
        doctest::Approx(wrap_two_pi(kPi + s.dp.lambda - s.ed.lambda)));
  CHECK(s.beta == doctest::Approx(wrap_pi(s.chi - kPi)));
  CHECK(rad_to_deg(s.chi) == doctest::Approx(228.43).epsilon(1e-3));
}
