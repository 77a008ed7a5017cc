#pragma once

#include <iosfwd>
#include <string>

#include "pursuit/simulator.hpp"

namespace pursuit {

/// Column schema:
/// t, xP,yP,gP,aP, xE,yE,gE,aE, xD,yD,gD,aD,
/// rEP,lEP,rdEP,ldEP, rDP,lDP,rdDP,ldDP, rED,lED,rdED,ldED,
/// chi,beta,S_inner,S_outer,S_E,U
/// Angles are radians; inapplicable fields (S_E in maneuver-level runs, U in
/// information-level runs) are left empty.
inline constexpr const char* kCsvHeader =
    "t,xP,yP,gP,aP,xE,yE,gE,aE,xD,yD,gD,aD,"
    "rEP,lEP,rdEP,ldEP,rDP,lDP,rdDP,ldDP,rED,lED,rdED,ldED,"
    "chi,beta,S_inner,S_outer,S_E,U";

void write_csv(const SimulationTrace& trace, std::ostream& out);
void write_csv(const SimulationTrace& trace, const std::string& path);

/// Reads a trace back. Recomputes chi and beta from the lambda columns and
/// throws ConfigError if they disagree with the stored values.
SimulationTrace read_csv(std::istream& in);
SimulationTrace read_csv_file(const std::string& path);

}  // namespace pursuit
