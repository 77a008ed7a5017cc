#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "pursuit/engagement.hpp"
#include "pursuit/guidance.hpp"

using namespace pursuit;

namespace {

std::mt19937 rng(7);

// Physically consistent random engagement with non-degenerate allocation and
// information-level denominators.
EngagementState random_state() {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  while (true) {
    const AgentState e{0.0, 0.0, 100.0, kPi * (2.0 * u01(rng) - 1.0)};
    const double lep = kPi * (2.0 * u01(rng) - 1.0);
    const double rep = 2000.0 + 6000.0 * u01(rng);
    const AgentState p{rep * std::cos(lep), rep * std::sin(lep), 200.0,
                       kPi * (2.0 * u01(rng) - 1.0)};
    const double led = kPi * (2.0 * u01(rng) - 1.0);
    const double red = 200.0 + 1800.0 * u01(rng);
    const AgentState d{red * std::cos(led), red * std::sin(led), 200.0,
                       kPi * (2.0 * u01(rng) - 1.0)};
    EngagementState s;
    try {
      s = make_engagement(p, e, d, kPi, 0.5 + 2.0 * u01(rng));
    } catch (const SingularGeometryError&) {
      continue;
    }
    const double den =
        std::cos(s.ed.delta_second) * s.dp.r + std::cos(s.dp.delta_first) * s.ed.r;
    if (std::abs(std::cos(s.ed.delta_first)) < 0.1) continue;
    if (std::abs(den) < 0.1 * std::max(s.dp.r, s.ed.r)) continue;
    const double b2 = std::cos(s.ed.delta_second) / s.ed.r +
                      std::cos(s.dp.delta_first) / s.dp.r;
    if (std::abs(b2) < 1e-4) continue;
    return s;
  }
}

struct Laws {
  GuidanceConfig cfg;
  PrescribedTimeProfile gp{6.0, 6, 1e-3};
  ReachingEliminationProfile hp{3.0, 3, 0.01};
};

Laws make_laws() {
  Laws l;
  l.cfg.t_star = 6.0;
  l.cfg.k1 = 6;
  l.cfg.t1 = 3.0;
  l.cfg.k2 = 3;
  l.cfg.K = 5.0;
  return l;
}

}  // namespace

TEST_CASE("saturate") {
  const AgentLimits lim{196.2};
  CHECK(saturate(250.0, lim) == doctest::Approx(196.2));
  CHECK(saturate(-30.0, AgentLimits{98.1}) == doctest::Approx(-30.0));
  CHECK(saturate(0.0, lim) == 0.0);
}

TEST_CASE("switching function") {
  CHECK(switching_function(0.5, SwitchingKind::sign, 1e-3) == 1.0);
  CHECK(switching_function(-0.5, SwitchingKind::sign, 1e-3) == -1.0);
  CHECK(switching_function(5e-4, SwitchingKind::boundary_layer, 1e-3) ==
        doctest::Approx(0.5));
  CHECK(switching_function(0.5, SwitchingKind::boundary_layer, 1e-3) == 1.0);
}

TEST_CASE("pursuer laws") {
  PursuerLaw law;
  EngagementState s;
  s.ep.r = 5000.0;
  s.ep.r_dot = -300.0;
  s.ep.lambda = 0.0;
  s.pursuer.v = 200.0;
  s.pursuer.gamma = 0.0;

  SUBCASE("PNG with zero LOS rate coasts") {
    s.ep.lambda_dot = 0.0;
    CHECK(pursuer_command(law, s, 0.0) == 0.0);
  }
  SUBCASE("PNG direct substitution") {
    s.ep.lambda_dot = 0.01;
    CHECK(pursuer_command(law, s, 0.0) == doctest::Approx(9.0));
  }
  SUBCASE("PPG on pure collision course") {
    law.kind = PursuerLawKind::ppg;
    s.ep.lambda_dot = 0.0;
    s.pursuer.gamma = s.ep.lambda;
    CHECK(pursuer_command(law, s, 0.0) == doctest::Approx(0.0));
  }
}

TEST_CASE("joint command is linear in K under exact-sign switching") {
  Laws l = make_laws();
  l.cfg.switching = SwitchingKind::sign;
  const EngagementState s = random_state();
  const double u1 =
      joint_cooperative_command(s, l.cfg, l.gp, l.hp, l.cfg.boundary_layer);
  l.cfg.K += 2.5;
  const double u2 =
      joint_cooperative_command(s, l.cfg, l.gp, l.hp, l.cfg.boundary_layer);
  const double g = g_value(l.gp, s.beta, s.t);
  const double s_outer =
      outer_manifold(inner_manifold(s.beta_dot(), g), h_value(l.hp, s.t));
  const double sw = s_outer > 0.0 ? 1.0 : -1.0;
  CHECK(u2 - u1 == doctest::Approx(-2.5 * sw).epsilon(1e-12));
}

TEST_CASE("joint command matches independent transcription") {
  const Laws l = make_laws();
  for (int i = 0; i < 30; ++i) {
    const EngagementState s = random_state();
    const double phi = l.cfg.boundary_layer;
    const double got = joint_cooperative_command(s, l.cfg, l.gp, l.hp, phi);
    const double g = g_value(l.gp, s.beta, s.t);
    const double gdot = g_rate(l.gp, s.beta, s.beta_dot(), s.t);
    const double s_bar = s.beta_dot() - g + h_value(l.hp, s.t);
    const double sw = std::clamp(s_bar / phi, -1.0, 1.0);
    const double want = 2.0 * s.dp.r_dot * s.dp.lambda_dot / s.dp.r -
                        2.0 * s.ed.r_dot * s.ed.lambda_dot / s.ed.r + gdot -
                        h_rate(l.hp, s.t) - l.cfg.K * sw;
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("allocation closed forms") {
  SUBCASE("zero effort splits to zero") {
    const EngagementState s = random_state();
    const Allocation a = allocate(0.0, s, 1.0);
    CHECK(a.a_e == 0.0);
    CHECK(a.a_d == 0.0);
  }
  SUBCASE("unit-coefficient case") {
    // cos(delta_ED)/r_ED = 1 and cos(delta_DE)/r_ED + cos(delta_DP)/r_DP = 1.
    EngagementState s;
    s.ed.r = 1.0;
    s.ed.delta_first = 0.0;
    s.ed.delta_second = kPi / 3.0;
    s.dp.r = 1.0;
    s.dp.delta_first = kPi / 3.0;
    const Allocation a = allocate(2.0, s, 1.0);
    CHECK(a.a_e == doctest::Approx(1.0));
    CHECK(a.a_d == doctest::Approx(-1.0));
  }
}

TEST_CASE("allocation identity and sigma monotonicity") {
  std::uniform_real_distribution<double> uu(-100.0, 100.0);
  for (int i = 0; i < 50; ++i) {
    const EngagementState s = random_state();
    double u = uu(rng);
    if (std::abs(u) < 1.0) u = 1.0;
    const double b1 = std::cos(s.ed.delta_first) / s.ed.r;
    const double b2 = std::cos(s.ed.delta_second) / s.ed.r +
                      std::cos(s.dp.delta_first) / s.dp.r;
    const Allocation a = allocate(u, s, 1.0);
    CHECK(b1 * a.a_e - b2 * a.a_d ==
          doctest::Approx(u).epsilon(1e-10));
    const Allocation hi = allocate(u, s, 2.0);
    CHECK(std::abs(hi.a_e) > std::abs(a.a_e));
    CHECK(std::abs(hi.a_d) < std::abs(a.a_d));
  }
}

TEST_CASE("degenerate allocation and defender-only fallback") {
  EngagementState s = random_state();
  s.ed.delta_first = kPi / 2.0;  // cos(delta_ED) = 0
  CHECK_THROWS_AS(allocate(3.0, s, 1.0), DegenerateAllocationError);
  const double b2 = std::cos(s.ed.delta_second) / s.ed.r +
                    std::cos(s.dp.delta_first) / s.dp.r;
  const Allocation fb = allocate_defender_only(3.0, s);
  CHECK(fb.a_e == 0.0);
  CHECK(fb.a_d == doctest::Approx(-3.0 / b2));
}

TEST_CASE("decoy command mirror symmetry") {
  GuidanceConfig cfg;
  cfg.mode = CooperationMode::information_level;
  cfg.K1 = 1.0;
  EngagementState s = random_state();
  s.ep.lambda_dot = 0.013;
  const DecoyProfile dp_pos(4.0, 3, -s.ep.lambda_dot);
  const double a_pos = decoy_command(s, cfg, dp_pos, cfg.boundary_layer);
  s.ep.lambda_dot = -0.013;
  s.ep.r_dot = s.ep.r_dot;  // range rate unchanged
  const DecoyProfile dp_neg(4.0, 3, -s.ep.lambda_dot);
  const double a_neg = decoy_command(s, cfg, dp_neg, cfg.boundary_layer);
  CHECK(a_neg == doctest::Approx(-a_pos).epsilon(1e-12));
}

TEST_CASE("decoy command is zero once settled") {
  GuidanceConfig cfg;
  cfg.mode = CooperationMode::information_level;
  EngagementState s = random_state();
  s.t = 5.0;
  s.ep.lambda_dot = 0.0;
  const DecoyProfile dp(4.0, 3, -0.01);
  CHECK(decoy_command(s, cfg, dp, cfg.boundary_layer) == doctest::Approx(0.0));
}

TEST_CASE("information-level defender satisfies the sliding contract") {
  Laws l = make_laws();
  l.cfg.mode = CooperationMode::information_level;
  std::uniform_real_distribution<double> acc(-50.0, 50.0);
  for (int i = 0; i < 30; ++i) {
    const EngagementState s = random_state();
    const double a_e = acc(rng), a_p = acc(rng);
    const double phi = l.cfg.boundary_layer;
    const double a_d =
        defender_command_info(s, l.cfg, l.gp, l.hp, a_e, phi);
    // dS_bar/dt = beta_ddot - g_dot + h_dot must reduce to
    // cos(delta_PD)/r_DP * a_P - K*sw(S_bar).
    const double g = g_value(l.gp, s.beta, s.t);
    const double gdot = g_rate(l.gp, s.beta, s.beta_dot(), s.t);
    const double s_bar = s.beta_dot() - g + h_value(l.hp, s.t);
    const double lhs =
        beta_accel(s, a_p, a_e, a_d) - gdot + h_rate(l.hp, s.t);
    const double rhs = std::cos(s.dp.delta_second) / s.dp.r * a_p -
                       l.cfg.K * std::clamp(s_bar / phi, -1.0, 1.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
  }
}

TEST_CASE("maneuver and information defenders agree given the same a_E") {
  Laws l = make_laws();
  for (int i = 0; i < 30; ++i) {
    const EngagementState s = random_state();
    const double phi = l.cfg.boundary_layer;
    const double u = joint_cooperative_command(s, l.cfg, l.gp, l.hp, phi);
    const Allocation alloc = allocate(u, s, l.cfg.sigma);
    GuidanceConfig info = l.cfg;
    info.mode = CooperationMode::information_level;
    const double a_d_info =
        defender_command_info(s, info, l.gp, l.hp, alloc.a_e, phi);
    CHECK(a_d_info == doctest::Approx(alloc.a_d).epsilon(1e-8));
  }
}

TEST_CASE("config validation") {
  GuidanceConfig cfg;
  cfg.chi_star = deg_to_rad(60.0);
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = GuidanceConfig{};
  cfg.t1 = 7.0;  // t1 >= t_star
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = GuidanceConfig{};
  cfg.sigma = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}
