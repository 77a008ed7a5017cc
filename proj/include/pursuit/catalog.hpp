#pragma once

#include <string>
#include <vector>

#include "pursuit/scenario.hpp"

namespace pursuit {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string text;  // scenario file contents
};

/// The shipped scenario catalog covering the simulation studies.
const std::vector<CatalogEntry>& catalog();

/// Looks up an entry by name; throws ConfigError if absent.
ScenarioConfig catalog_scenario(const std::string& name);

}  // namespace pursuit
