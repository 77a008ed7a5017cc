#include "pursuit/profiles.hpp"

#include <cmath>

namespace pursuit {

PrescribedTimeProfile::PrescribedTimeProfile(double t_star_, int k1_,
                                             double eps_guard_)
    : t_star(t_star_), k1(k1_), eps_guard(eps_guard_) {
  if (t_star <= 0.0) throw ConfigError("PrescribedTimeProfile: t_star <= 0");
  if (k1 < 1) throw ConfigError("PrescribedTimeProfile: k1 < 1");
  if (eps_guard <= 0.0)
    throw ConfigError("PrescribedTimeProfile: eps_guard <= 0");
}

double g_value(const PrescribedTimeProfile& p, double beta, double t) {
  if (t >= p.t_star - p.eps_guard) return 0.0;
  return -p.k1 * beta / (p.t_star - t);
}

double g_rate(const PrescribedTimeProfile& p, double beta, double beta_dot,
              double t) {
  if (t >= p.t_star - p.eps_guard) return 0.0;
  const double rem = p.t_star - t;
  return -p.k1 * (beta_dot * rem + beta) / (rem * rem);
}

ReachingEliminationProfile::ReachingEliminationProfile(double t1_, int k2_,
                                                       double h0_)
    : t1(t1_), k2(k2_), h0(h0_) {
  if (t1 <= 0.0) throw ConfigError("ReachingEliminationProfile: t1 <= 0");
  if (k2 < 1) throw ConfigError("ReachingEliminationProfile: k2 < 1");
}

double h_value(const ReachingEliminationProfile& p, double t) {
  if (t >= p.t1) return 0.0;
  return p.h0 * std::pow(p.t1 - t, p.k2) / std::pow(p.t1, p.k2);
}

double h_rate(const ReachingEliminationProfile& p, double t) {
  if (t >= p.t1) return 0.0;
  return -p.k2 * p.h0 * std::pow(p.t1 - t, p.k2 - 1) / std::pow(p.t1, p.k2);
}

DecoyProfile::DecoyProfile(double t2_, int k3_, double hE0_)
    : t2(t2_), k3(k3_), hE0(hE0_) {
  if (t2 <= 0.0) throw ConfigError("DecoyProfile: t2 <= 0");
  if (k3 < 1) throw ConfigError("DecoyProfile: k3 < 1");
}

double hE_value(const DecoyProfile& p, double t) {
  if (t >= p.t2) return 0.0;
  return p.hE0 * std::pow(p.t2 - t, p.k3) / std::pow(p.t2, p.k3);
}

double hE_rate(const DecoyProfile& p, double t) {
  if (t >= p.t2) return 0.0;
  return -p.k3 * p.hE0 * std::pow(p.t2 - t, p.k3 - 1) / std::pow(p.t2, p.k3);
}

double beta_reference(double beta_at_t1, double t1, double t_star, int k1,
                      double t) {
  if (t < t1 - 1e-12 || t > t_star + 1e-12) {
    throw ConfigError("beta_reference: t outside [t1, t_star]");
  }
  if (t >= t_star) return 0.0;
  return beta_at_t1 * std::pow((t_star - t) / (t_star - t1), k1);
}

double lambda_dot_ep_reference(double lam0, double t2, int k3, double t) {
  if (t >= t2) return 0.0;
  return lam0 * std::pow((t2 - t) / t2, k3);
}

}  // namespace pursuit
