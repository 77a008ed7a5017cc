#include "pursuit/catalog.hpp"

#include <algorithm>

namespace pursuit {

namespace {

// Baseline cooperative engagement: PNG pursuer 5000 m away, defender 400 m
// from the evader at -45 deg, prescribed times t1 = 3 s, t* = 6 s.
ScenarioConfig maneuver_base() {
  ScenarioConfig cfg;
  cfg.guidance.mode = CooperationMode::maneuver_level;
  cfg.guidance.chi_star = deg_to_rad(180.0);
  cfg.guidance.t_star = 6.0;
  cfg.guidance.t1 = 3.0;
  cfg.guidance.k1 = 6;
  cfg.guidance.k2 = 3;
  cfg.guidance.K = 5.0;
  cfg.guidance.sigma = 1.0;
  cfg.law.kind = PursuerLawKind::png;
  cfg.v_p = 200.0;
  cfg.v_e = 100.0;
  cfg.v_d = 200.0;
  cfg.lim_p.a_max = 20.0 * 9.81;
  cfg.lim_e.a_max = 10.0 * 9.81;
  cfg.lim_d.a_max = 20.0 * 9.81;
  cfg.pursuer_placement = {5000.0, deg_to_rad(0.0)};
  cfg.defender_placement = {400.0, deg_to_rad(-45.0)};
  cfg.gamma_p = deg_to_rad(180.0);
  cfg.gamma_e = deg_to_rad(45.0);
  cfg.gamma_d = deg_to_rad(0.0);
  cfg.sim.t_max = 30.0;
  return cfg;
}

// Defender-only defense of a non-maneuvering, quasi-stationary evader.
ScenarioConfig stationary_base() {
  ScenarioConfig cfg = maneuver_base();
  cfg.guidance.evader_passive = true;
  cfg.v_e = 1e-3;
  cfg.gamma_e = 0.0;
  cfg.pursuer_placement = {5000.0, deg_to_rad(2.0)};
  return cfg;
}

// Information-level engagement: decoy evader with t2 = 4 s, defender alone
// enforces chi_star with t1 = 5 s, t* = 9 s.
ScenarioConfig info_base() {
  ScenarioConfig cfg;
  cfg.guidance.mode = CooperationMode::information_level;
  cfg.guidance.chi_star = deg_to_rad(180.0);
  cfg.guidance.t_star = 9.0;
  cfg.guidance.t1 = 5.0;
  cfg.guidance.k1 = 3;
  cfg.guidance.k2 = 3;
  cfg.guidance.t2 = 4.0;
  cfg.guidance.k3 = 3;
  cfg.guidance.K = 1.0;
  cfg.guidance.K1 = 1.0;
  cfg.law.kind = PursuerLawKind::png;
  cfg.v_p = 200.0;
  cfg.v_e = 100.0;
  cfg.v_d = 200.0;
  cfg.lim_p.a_max = 20.0 * 9.81;
  cfg.lim_e.a_max = 10.0 * 9.81;
  cfg.lim_d.a_max = 20.0 * 9.81;
  cfg.pursuer_placement = {5000.0, deg_to_rad(0.0)};
  cfg.defender_placement = {500.0, deg_to_rad(45.0)};
  cfg.gamma_p = deg_to_rad(180.0);
  cfg.gamma_e = deg_to_rad(0.0);
  cfg.gamma_d = deg_to_rad(45.0);
  cfg.sim.t_max = 30.0;
  return cfg;
}

CatalogEntry entry(std::string name, std::string description,
                   ScenarioConfig cfg) {
  cfg.name = name;
  return {std::move(name), std::move(description), serialize_scenario(cfg)};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  for (double chi : {120.0, 180.0, 228.0}) {
    ScenarioConfig cfg = maneuver_base();
    cfg.guidance.chi_star = deg_to_rad(chi);
    out.push_back(entry("fig3_chi" + std::to_string(int(chi)),
                        "maneuver-level intercept, chi* = " +
                            std::to_string(int(chi)) + " deg",
                        cfg));
  }

  for (auto [name, kind] :
       {std::pair{"png", PursuerLawKind::png}, {"ppg", PursuerLawKind::ppg},
        {"dpg", PursuerLawKind::dpg}}) {
    ScenarioConfig cfg = maneuver_base();
    cfg.law.kind = kind;
    out.push_back(entry(std::string("fig4_") + name,
                        std::string("maneuver-level, pursuer uses ") + name,
                        cfg));
  }

  {
    const double ranges[] = {400.0, 1500.0, 2000.0};
    const double los[] = {-45.0, -10.0, 10.0};
    for (int i = 0; i < 3; ++i) {
      ScenarioConfig cfg = stationary_base();
      cfg.defender_placement = {ranges[i], deg_to_rad(los[i])};
      out.push_back(entry("fig5_d" + std::to_string(int(ranges[i])),
                          "stationary evader, defender starts " +
                              std::to_string(int(ranges[i])) + " m away",
                          cfg));
    }
  }

  for (double los : {-5.0, 0.0, 2.0}) {
    ScenarioConfig cfg = stationary_base();
    cfg.pursuer_placement = {5000.0, deg_to_rad(los)};
    std::string tag = los < 0 ? "m" + std::to_string(int(-los))
                              : std::to_string(int(los));
    out.push_back(entry("fig6_p_los" + tag,
                        "stationary evader, pursuer LOS " +
                            std::to_string(int(los)) + " deg",
                        cfg));
  }

  {
    ScenarioConfig cfg = maneuver_base();
    cfg.lim_p.a_max = 8.0 * 9.81;
    cfg.lim_d.a_max = 8.0 * 9.81;
    cfg.lim_e.a_max = 4.0 * 9.81;
    out.push_back(entry("fig9_reduced",
                        "maneuver-level with reduced acceleration limits",
                        cfg));
  }

  for (double chi : {150.0, 180.0, 200.0}) {
    ScenarioConfig cfg = info_base();
    cfg.guidance.chi_star = deg_to_rad(chi);
    out.push_back(entry("fig7_info_chi" + std::to_string(int(chi)),
                        "information-level, chi* = " + std::to_string(int(chi)) +
                            " deg",
                        cfg));
  }

  for (double t2 : {4.0, 6.0, 8.0}) {
    ScenarioConfig cfg = info_base();
    cfg.guidance.t2 = t2;
    out.push_back(entry("fig8_info_t2_" + std::to_string(int(t2)),
                        "information-level, decoy time t2 = " +
                            std::to_string(int(t2)) + " s",
                        cfg));
  }

  for (auto [name, kind] :
       {std::pair{"png", PursuerLawKind::png}, {"bpng", PursuerLawKind::bpng},
        {"ppg", PursuerLawKind::ppg}}) {
    ScenarioConfig cfg = info_base();
    cfg.law.kind = kind;
    out.push_back(entry(std::string("fig10_info_") + name,
                        std::string("information-level, pursuer uses ") + name,
                        cfg));
  }

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

ScenarioConfig catalog_scenario(const std::string& name) {
  const auto& entries = catalog();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const auto& e) { return e.name == name; });
  if (it == entries.end()) {
    throw ConfigError("no catalog scenario named '" + name + "'");
  }
  return parse_scenario_text(it->text, "catalog:" + name);
}

}  // namespace pursuit
