#pragma once

#include "pursuit/types.hpp"

namespace pursuit {

/// Time-varying gain profile g(t) = -k1*beta/(t_star - t) driving beta to zero
/// exactly at t_star. The division is guarded one integration step short of
/// t_star.
struct PrescribedTimeProfile {
  double t_star;     // s, > 0
  int k1;            // >= 1
  double eps_guard;  // s, the integration step

  PrescribedTimeProfile(double t_star_, int k1_, double eps_guard_);
};

double g_value(const PrescribedTimeProfile& p, double beta, double t);
double g_rate(const PrescribedTimeProfile& p, double beta, double beta_dot,
              double t);

/// Reaching-phase elimination profile h(t), with h(0) = -S_inner(0) so that
/// the outer manifold starts at zero.
struct ReachingEliminationProfile {
  double t1;  // s, 0 < t1 < t_star
  int k2;     // >= 1
  double h0;

  ReachingEliminationProfile(double t1_, int k2_, double h0_);
};

double h_value(const ReachingEliminationProfile& p, double t);
double h_rate(const ReachingEliminationProfile& p, double t);

/// Decoy profile h_E(t) with h_E(0) = -lambda_dot_EP(0); drives the
/// evader-pursuer LOS rate to zero exactly at t2.
struct DecoyProfile {
  double t2;  // s, > 0
  int k3;     // >= 1
  double hE0;

  DecoyProfile(double t2_, int k3_, double hE0_);
};

double hE_value(const DecoyProfile& p, double t);
double hE_rate(const DecoyProfile& p, double t);

inline double inner_manifold(double beta_dot, double g) { return beta_dot - g; }
inline double outer_manifold(double s_inner, double h) { return s_inner + h; }
inline double decoy_manifold(double lambda_dot_ep, double hE) {
  return lambda_dot_ep + hE;
}

/// Closed-form beta trajectory on the inner manifold, re-anchored at t1 where
/// sliding is first enforced. Throws ConfigError for t outside [t1, t_star].
double beta_reference(double beta_at_t1, double t1, double t_star, int k1,
                      double t);

/// Closed-form decoy LOS-rate trajectory; zero for t >= t2.
double lambda_dot_ep_reference(double lam0, double t2, int k3, double t);

}  // namespace pursuit
