#pragma once

#include <optional>

#include "pursuit/engagement.hpp"
#include "pursuit/profiles.hpp"
#include "pursuit/types.hpp"

namespace pursuit {

enum class CooperationMode { maneuver_level, information_level };
enum class SwitchingKind { boundary_layer, sign };
enum class PursuerLawKind { png, ppg, dpg, bpng };

struct PursuerLaw {
  PursuerLawKind kind = PursuerLawKind::png;
  double nav_constant = 3.0;               // PNG / BPNG
  double pursuit_gain = 0.1;               // 1/s, PPG / DPG
  double deviation = deg_to_rad(20.0);     // rad, DPG
  double bias_gain = 1.0;                  // BPNG
};

struct GuidanceConfig {
  CooperationMode mode = CooperationMode::maneuver_level;
  double chi_star = kPi;  // rad, [pi/2, 3pi/2]
  double t_star = 6.0;
  int k1 = 6;
  double t1 = 3.0;
  int k2 = 3;
  double t2 = 4.0;  // information_level only
  int k3 = 3;       // information_level only
  double K = 5.0;
  double K1 = 1.0;  // information_level only
  double sigma = 1.0;
  double boundary_layer = 1e-3;  // rad/s
  SwitchingKind switching = SwitchingKind::boundary_layer;
  // Evader applies no steering; the defender alone enforces chi_star.
  bool evader_passive = false;
  // Inside this defender-pursuer range the angle law's demanded LOS rate is
  // no longer achievable with bounded acceleration, so the defender hands
  // off to proportional navigation on the defender-pursuer pair for the
  // final approach. Zero (the default) disables the handoff.
  double terminal_handoff_radius = 0.0;  // m
  double terminal_nav_constant = 4.0;

  void validate() const;
};

struct GuidanceCommand {
  double a_p = 0.0, a_e = 0.0, a_d = 0.0;              // post-saturation
  double raw_a_p = 0.0, raw_a_e = 0.0, raw_a_d = 0.0;  // pre-saturation
  double u = 0.0;  // net cooperative effort (maneuver-level; NaN otherwise)
};

double saturate(double raw, const AgentLimits& limits);

/// Switching term sw(s): exact sign, or boundary-layer saturation
/// clamp(s/phi, -1, 1).
double switching_function(double s, SwitchingKind kind, double phi);

/// One of PNG / PPG / DPG / BPNG. a_e_observed feeds the BPNG bias only.
double pursuer_command(const PursuerLaw& law, const EngagementState& s,
                       double a_e_observed);

/// Net cooperative effort U of the maneuver-level law. s_outer and the
/// profile evaluations must correspond to the same state and time.
double joint_cooperative_command(const EngagementState& s,
                                 const GuidanceConfig& cfg,
                                 const PrescribedTimeProfile& gp,
                                 const ReachingEliminationProfile& hp,
                                 double phi);

struct Allocation {
  double a_e = 0.0;
  double a_d = 0.0;
};

/// Weighted minimum-cost split of U over the affine constraint
/// B1*a_E - B2*a_D = U. Throws DegenerateAllocationError when |cos(delta_ED)|
/// is too small for a bounded evader command.
Allocation allocate(double u, const EngagementState& s, double sigma);

/// Defender-only split used as the degenerate fallback and for a passive
/// evader: a_E = 0, a_D = -U/B2.
Allocation allocate_defender_only(double u, const EngagementState& s);

/// Evader decoy law (information level). Throws DegenerateGeometryError when
/// |cos(delta_EP)| is too small.
double decoy_command(const EngagementState& s, const GuidanceConfig& cfg,
                     const DecoyProfile& dp, double phi);

/// Information-level defender law; a_e_observed is the evader's applied
/// command. Throws DegenerateGeometryError on a near-zero denominator.
double defender_command_info(const EngagementState& s,
                             const GuidanceConfig& cfg,
                             const PrescribedTimeProfile& gp,
                             const ReachingEliminationProfile& hp,
                             double a_e_observed, double phi);

/// Per-run guidance wrapper. Freezes h(0), h_E(0) from the initial state and
/// owns the one-step hold-last-command fallback for degenerate geometries.
class CooperativeController {
 public:
  struct StepInfo {
    GuidanceCommand cmd;
    double s_inner = 0.0;
    double s_outer = 0.0;
    double s_e = 0.0;  // NaN in maneuver-level mode
    bool degenerate_hold = false;
    bool fallback_allocation = false;
  };

  CooperativeController(const GuidanceConfig& cfg, const PursuerLaw& law,
                        const AgentLimits& lim_p, const AgentLimits& lim_e,
                        const AgentLimits& lim_d,
                        const EngagementState& initial, double dt);

  StepInfo compute(const EngagementState& s);

  int hold_streak() const { return hold_streak_; }
  const ReachingEliminationProfile& reaching_profile() const { return hp_; }
  const PrescribedTimeProfile& beta_profile() const { return gp_; }
  const std::optional<DecoyProfile>& decoy_profile() const { return decoy_; }
  double effective_boundary_layer() const { return phi_; }
  double effective_decoy_boundary_layer() const { return phi_decoy_; }

 private:
  GuidanceConfig cfg_;
  PursuerLaw law_;
  AgentLimits lim_p_, lim_e_, lim_d_;
  PrescribedTimeProfile gp_;
  ReachingEliminationProfile hp_;
  std::optional<DecoyProfile> decoy_;
  double phi_;
  double phi_decoy_;
  double last_a_e_ = 0.0;
  double last_a_d_ = 0.0;
  int hold_streak_ = 0;
};

}  // namespace pursuit
