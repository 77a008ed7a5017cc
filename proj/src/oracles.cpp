#include "pursuit/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace pursuit {
namespace oracles {

namespace {

// Independent transcription of the LOS acceleration: for the pair (A, B) with
// A at the LOS origin,
//   lambda_ddot = -2 r_dot lambda_dot / r + cos(gamma_B - lambda)/r * a_B
//                 - cos(gamma_A - lambda)/r * a_A.
double los_accel_from_row(const TraceRow& row, Pair pair) {
  const PairState* p = nullptr;
  double gamma_a = 0.0, gamma_b = 0.0, a_a = 0.0, a_b = 0.0;
  switch (pair) {
    case Pair::ep:
      p = &row.ep;
      gamma_a = row.evader.gamma;
      gamma_b = row.pursuer.gamma;
      a_a = row.cmd.a_e;
      a_b = row.cmd.a_p;
      break;
    case Pair::dp:
      p = &row.dp;
      gamma_a = row.defender.gamma;
      gamma_b = row.pursuer.gamma;
      a_a = row.cmd.a_d;
      a_b = row.cmd.a_p;
      break;
    case Pair::ed:
      p = &row.ed;
      gamma_a = row.evader.gamma;
      gamma_b = row.defender.gamma;
      a_a = row.cmd.a_e;
      a_b = row.cmd.a_d;
      break;
  }
  return -2.0 * p->r_dot * p->lambda_dot / p->r +
         std::cos(wrap_pi(gamma_b - p->lambda)) / p->r * a_b -
         std::cos(wrap_pi(gamma_a - p->lambda)) / p->r * a_a;
}

double lambda_dot_of(const TraceRow& row, Pair pair) {
  switch (pair) {
    case Pair::ep: return row.ep.lambda_dot;
    case Pair::dp: return row.dp.lambda_dot;
    case Pair::ed: return row.ed.lambda_dot;
  }
  return 0.0;
}

std::vector<bool> build_mask(const SimulationTrace& trace,
                             const FDSettings& settings) {
  const std::size_t n = trace.rows.size();
  std::vector<bool> masked(n, false);
  auto mark = [&](std::size_t i) {
    const std::size_t lo =
        i > static_cast<std::size_t>(settings.mask_halo)
            ? i - settings.mask_halo
            : 0;
    const std::size_t hi =
        std::min(n - 1, i + static_cast<std::size_t>(settings.mask_halo));
    for (std::size_t j = lo; j <= hi; ++j) masked[j] = true;
  };
  for (std::size_t i = 1; i < n; ++i) {
    const TraceRow& a = trace.rows[i - 1];
    const TraceRow& b = trace.rows[i];
    // Switching instants: sign changes of the logged manifolds.
    if (a.s_outer * b.s_outer < 0.0 || a.s_inner * b.s_inner < 0.0) mark(i);
    if (std::isfinite(a.s_e) && std::isfinite(b.s_e) && a.s_e * b.s_e < 0.0) {
      mark(i);
    }
    // Saturated segments: applied command differs from the raw one.
    auto saturated = [](const GuidanceCommand& c) {
      return c.a_p != c.raw_a_p || c.a_e != c.raw_a_e || c.a_d != c.raw_a_d;
    };
    if (saturated(b.cmd)) mark(i);
  }
  return masked;
}

}  // namespace

double fd_check_los_accel(const SimulationTrace& trace, Pair pair,
                          const FDSettings& settings) {
  const std::size_t n = trace.rows.size();
  if (n < 3) return 0.0;
  const std::vector<bool> masked = build_mask(trace, settings);
  double max_dev = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (masked[i - 1] || masked[i] || masked[i + 1]) continue;
    const double dt_total = trace.rows[i + 1].t - trace.rows[i - 1].t;
    if (dt_total <= 0.0) continue;
    const double fd =
        (lambda_dot_of(trace.rows[i + 1], pair) -
         lambda_dot_of(trace.rows[i - 1], pair)) /
        dt_total;
    const double analytic = los_accel_from_row(trace.rows[i], pair);
    max_dev = std::max(max_dev, std::abs(fd - analytic));
  }
  return max_dev;
}

bool allocation_grid_check(double b1, double b2, double sigma, double u,
                           int n, double tol) {
  // Closed forms under test (retranscribed from the weighted-cost minimum).
  const double a_d_star = -b2 * u / (b1 * b1 * sigma * sigma + b2 * b2);
  const double a_e_star = (u + b2 * a_d_star) / b1;
  const auto cost = [&](double a_e, double a_d) {
    return std::hypot(a_e / sigma, a_d);
  };
  const double c_star = cost(a_e_star, a_d_star);
  // Sample the constraint line around the candidate.
  const double span =
      2.0 * std::max({std::abs(a_d_star), std::abs(u / b2), 1.0});
  for (int i = 0; i < n; ++i) {
    const double a_d = a_d_star - span + 2.0 * span * i / (n - 1);
    const double a_e = (u + b2 * a_d) / b1;
    if (cost(a_e, a_d) < c_star - tol) return false;
  }
  return true;
}

ClosedFormDeviation closed_form_compare(const SimulationTrace& trace,
                                        const GuidanceConfig& cfg) {
  ClosedFormDeviation out;
  if (trace.rows.empty()) return out;

  // beta against its closed form, anchored at the first sample past t1.
  const TraceRow* anchor = nullptr;
  for (const TraceRow& row : trace.rows) {
    if (row.t >= cfg.t1) {
      anchor = &row;
      break;
    }
  }
  if (anchor != nullptr && anchor->t < cfg.t_star) {
    for (const TraceRow& row : trace.rows) {
      if (row.t < anchor->t || row.t > cfg.t_star) continue;
      const double ref = beta_reference(anchor->beta, anchor->t, cfg.t_star,
                                        cfg.k1, row.t);
      out.max_beta_dev = std::max(out.max_beta_dev, std::abs(row.beta - ref));
    }
  }

  if (cfg.mode == CooperationMode::information_level) {
    const double lam0 = trace.rows.front().ep.lambda_dot;
    for (const TraceRow& row : trace.rows) {
      if (row.t > cfg.t2) break;
      const double ref = lambda_dot_ep_reference(lam0, cfg.t2, cfg.k3, row.t);
      out.max_lambda_dot_dev = std::max(out.max_lambda_dot_dev,
                                        std::abs(row.ep.lambda_dot - ref));
    }
  }
  return out;
}

}  // namespace oracles
}  // namespace pursuit
