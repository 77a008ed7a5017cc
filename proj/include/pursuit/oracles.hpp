#pragma once

#include "pursuit/guidance.hpp"
#include "pursuit/simulator.hpp"

namespace pursuit {
namespace oracles {

// Independent numeric checks used to back the property and acceptance
// suites. Formulas here are transcribed separately from the guidance engine
// and must not call into it.

enum class Pair { ep, dp, ed };

struct FDSettings {
  // Samples masked on each side of a switching-sign change or a saturated
  // segment.
  int mask_halo = 3;
};

/// Central finite differences of the logged LOS-rate column against an
/// independent transcription of the analytic LOS acceleration along the
/// trace. Returns the max absolute deviation over unmasked samples.
double fd_check_los_accel(const SimulationTrace& trace, Pair pair,
                          const FDSettings& settings = {});

/// Grid-search optimality of the closed-form allocation: samples n points of
/// a_D on the constraint line B1*a_E - B2*a_D = U, evaluates the weighted
/// cost, and checks the closed form is within tol of the grid minimum.
bool allocation_grid_check(double b1, double b2, double sigma, double u,
                           int n = 10000, double tol = 1e-9);

struct ClosedFormDeviation {
  double max_beta_dev = 0.0;        // over [t1, t_star]
  double max_lambda_dot_dev = 0.0;  // over [0, t2], information-level only
};

/// Max deviation of the logged beta (and, in information-level runs, the
/// logged lambda_dot_EP) from their closed-form reference trajectories.
ClosedFormDeviation closed_form_compare(const SimulationTrace& trace,
                                        const GuidanceConfig& cfg);

}  // namespace oracles
}  // namespace pursuit
