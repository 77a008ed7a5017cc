#pragma once

#include <iosfwd>
#include <string>

#include "pursuit/guidance.hpp"
#include "pursuit/simulator.hpp"

namespace pursuit {

/// Initial polar placement of one agent relative to the evader.
struct Placement {
  double range = 0.0;  // m
  double los = 0.0;    // rad, LOS angle from the evader
};

struct OutputOptions {
  bool write_csv = true;
  bool write_svg = true;
  std::string out_dir = ".";
};

struct ScenarioConfig {
  std::string name = "scenario";
  double v_p = 200.0, v_e = 100.0, v_d = 200.0;
  AgentLimits lim_p{196.2}, lim_e{98.1}, lim_d{196.2};
  Placement pursuer_placement, defender_placement;
  double gamma_p = 0.0, gamma_e = 0.0, gamma_d = 0.0;
  GuidanceConfig guidance;
  PursuerLaw law;
  SimConfig sim;
  OutputOptions output;

  AgentState initial_pursuer() const;
  AgentState initial_evader() const;
  AgentState initial_defender() const;
  EngagementState initial_engagement() const;
  void validate() const;
};

/// Parses the flat key=value scenario format (angles in degrees, '#'
/// comments). Throws ConfigError with line-precise diagnostics.
ScenarioConfig parse_scenario_text(const std::string& text,
                                   const std::string& origin = "<string>");
ScenarioConfig parse_scenario(const std::string& path);

/// Emits the key=value form; parse(serialize(cfg)) == cfg for valid configs.
std::string serialize_scenario(const ScenarioConfig& cfg);

}  // namespace pursuit
