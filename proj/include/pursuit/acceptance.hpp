#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pursuit {
namespace acceptance {

struct CriterionResult {
  std::string id;
  std::string description;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
  std::string detail;
};

/// Runs one of the suites {maneuver, info, properties, all}. Throws
/// ConfigError for an unknown suite name.
std::vector<CriterionResult> run_suite(const std::string& suite);

/// One line per criterion: id, measured value, bound, pass/fail. Returns true
/// when every criterion passed.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace acceptance
}  // namespace pursuit
