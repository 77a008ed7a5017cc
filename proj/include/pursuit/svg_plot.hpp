#pragma once

#include <string>

#include "pursuit/simulator.hpp"

namespace pursuit {

/// Self-contained SVG emitters mirroring the usual four-panel engagement
/// figures. No external plotting dependencies.

/// x-y plane with the three agent paths and capture marker.
void plot_trajectories(const SimulationTrace& trace, const std::string& path);

/// beta and the sliding manifolds versus time.
void plot_manifolds(const SimulationTrace& trace, const std::string& path);

/// Saturated steering commands (and U when present) versus time.
void plot_commands(const SimulationTrace& trace, const std::string& path);

}  // namespace pursuit
