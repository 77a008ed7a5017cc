#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "pursuit/catalog.hpp"
#include "pursuit/scenario.hpp"
#include "pursuit/trace_io.hpp"

using namespace pursuit;

namespace {

std::string catalog_text(const std::string& name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name) return e.text;
  }
  FAIL("missing catalog entry ", name);
  return {};
}

}  // namespace

TEST_CASE("every catalog entry parses and validates") {
  CHECK(!catalog().empty());
  for (const CatalogEntry& e : catalog()) {
    const ScenarioConfig cfg = catalog_scenario(e.name);
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.name == e.name);
  }
  CHECK_THROWS_AS(catalog_scenario("no_such_entry"), ConfigError);
}

TEST_CASE("serialize/parse round trip") {
  for (const char* name : {"fig3_chi180", "fig7_info_chi180", "fig5_d400"}) {
    const ScenarioConfig cfg = catalog_scenario(name);
    const std::string text = serialize_scenario(cfg);
    const ScenarioConfig back = parse_scenario_text(text, "<round-trip>");
    CHECK(serialize_scenario(back) == text);
  }
}

TEST_CASE("parse diagnostics") {
  SUBCASE("empty file lists the required keys") {
    try {
      parse_scenario_text("", "<empty>");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("chi_star_deg") != std::string::npos);
      CHECK(msg.find("t_star") != std::string::npos);
      CHECK(msg.find("pursuer_law") != std::string::npos);
    }
  }
  SUBCASE("unknown key reports its line") {
    std::string text = catalog_text("fig3_chi180");
    text += "bogus_key=1\n";
    try {
      parse_scenario_text(text, "<unknown>");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("bogus_key") != std::string::npos);
      CHECK(msg.find("<unknown>:") != std::string::npos);
    }
  }
  SUBCASE("duplicate key rejected") {
    std::string text = catalog_text("fig3_chi180");
    text += "t_star=6\n";
    CHECK_THROWS_AS(parse_scenario_text(text, "<dup>"), ConfigError);
  }
  SUBCASE("chi_star outside [90, 270] deg rejected") {
    std::string text = catalog_text("fig3_chi180");
    const auto pos = text.find("chi_star_deg");
    REQUIRE(pos != std::string::npos);
    const auto eol = text.find('\n', pos);
    text.replace(pos, eol - pos, "chi_star_deg = 60");
    CHECK_THROWS_AS(parse_scenario_text(text, "<chi60>"), ConfigError);
  }
}

TEST_CASE("initial placements honor the polar convention") {
  const ScenarioConfig cfg = catalog_scenario("fig3_chi180");
  const AgentState e = cfg.initial_evader();
  CHECK(e.x == 0.0);
  CHECK(e.y == 0.0);
  const AgentState d = cfg.initial_defender();
  CHECK(d.x == doctest::Approx(400.0 * std::cos(deg_to_rad(-45.0))));
  CHECK(d.y == doctest::Approx(400.0 * std::sin(deg_to_rad(-45.0))));
  const AgentState p = cfg.initial_pursuer();
  CHECK(p.x == doctest::Approx(5000.0));
  CHECK(p.y == doctest::Approx(0.0));
}

TEST_CASE("trace CSV round trip") {
  ScenarioConfig cfg = catalog_scenario("fig3_chi180");
  cfg.sim.dt = 1e-2;
  cfg.sim.t_max = 2.0;
  cfg.guidance.t1 = 0.5;
  cfg.guidance.t_star = 1.0;
  const SimulationTrace trace = run(cfg);
  std::ostringstream out;
  write_csv(trace, out);
  const std::string csv = out.str();
  CHECK(csv.rfind(kCsvHeader, 0) == 0);

  std::istringstream in(csv);
  const SimulationTrace back = read_csv(in);
  REQUIRE(back.rows.size() == trace.rows.size());
  for (std::size_t i = 0; i < trace.rows.size(); ++i) {
    CHECK(back.rows[i].t == doctest::Approx(trace.rows[i].t));
    CHECK(back.rows[i].pursuer.x == doctest::Approx(trace.rows[i].pursuer.x));
    CHECK(back.rows[i].chi == doctest::Approx(trace.rows[i].chi));
    CHECK(back.rows[i].ep.lambda_dot ==
          doctest::Approx(trace.rows[i].ep.lambda_dot));
  }
}

TEST_CASE("CSV loader rejects inconsistent chi") {
  ScenarioConfig cfg = catalog_scenario("fig3_chi180");
  cfg.sim.dt = 1e-2;
  cfg.sim.t_max = 1.0;
  cfg.guidance.t1 = 0.3;
  cfg.guidance.t_star = 0.6;
  SimulationTrace trace = run(cfg);
  trace.rows[1].chi += 0.5;
  std::ostringstream out;
  write_csv(trace, out);
  std::istringstream in(out.str());
  CHECK_THROWS_AS(read_csv(in), ConfigError);
}
