#include "pursuit/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace pursuit {

AgentState ScenarioConfig::initial_pursuer() const {
  return {pursuer_placement.range * std::cos(pursuer_placement.los),
          pursuer_placement.range * std::sin(pursuer_placement.los), v_p,
          wrap_pi(gamma_p)};
}

AgentState ScenarioConfig::initial_evader() const {
  return {0.0, 0.0, v_e, wrap_pi(gamma_e)};
}

AgentState ScenarioConfig::initial_defender() const {
  return {defender_placement.range * std::cos(defender_placement.los),
          defender_placement.range * std::sin(defender_placement.los), v_d,
          wrap_pi(gamma_d)};
}

EngagementState ScenarioConfig::initial_engagement() const {
  return make_engagement(initial_pursuer(), initial_evader(),
                         initial_defender(), guidance.chi_star, 0.0);
}

void ScenarioConfig::validate() const {
  if (v_p <= 0.0 || v_e <= 0.0 || v_d <= 0.0) {
    throw ConfigError("scenario: agent speeds must be > 0");
  }
  if (lim_p.a_max <= 0.0 || lim_e.a_max <= 0.0 || lim_d.a_max <= 0.0) {
    throw ConfigError("scenario: acceleration limits must be > 0");
  }
  if (pursuer_placement.range <= 0.0 || defender_placement.range <= 0.0) {
    throw ConfigError("scenario: initial ranges must be > 0");
  }
  guidance.validate();
  const double t2 = guidance.mode == CooperationMode::information_level
                        ? guidance.t2
                        : 0.0;
  sim.validate(guidance.t_star, guidance.t1, t2);
}

namespace {

struct Line {
  int number;
  std::string key;
  std::string value;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line,
                       const std::string& msg) {
  std::ostringstream os;
  os << origin << ":" << line << ": " << msg;
  throw ConfigError(os.str());
}

double parse_double(const Line& l, const std::string& origin) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(l.value, &pos);
    if (pos != l.value.size()) throw std::invalid_argument("trailing chars");
    return v;
  } catch (const std::exception&) {
    fail(origin, l.number, "invalid numeric value '" + l.value + "' for key '" +
                               l.key + "'");
  }
}

int parse_int(const Line& l, const std::string& origin) {
  const double v = parse_double(l, origin);
  if (v != std::floor(v)) {
    fail(origin, l.number, "expected an integer for key '" + l.key + "'");
  }
  return static_cast<int>(v);
}

bool parse_bool(const Line& l, const std::string& origin) {
  if (l.value == "true" || l.value == "1") return true;
  if (l.value == "false" || l.value == "0") return false;
  fail(origin, l.number, "expected true/false for key '" + l.key + "'");
}

const std::vector<std::string> kRequiredKeys = {
    "mode",        "chi_star_deg", "t_star",      "t1",
    "k1",          "k2",           "K",           "pursuer_law",
    "v_P",         "v_E",          "v_D",         "a_max_P",
    "a_max_E",     "a_max_D",      "r_EP",        "los_EP_deg",
    "r_ED",        "los_ED_deg",   "gamma_P_deg", "gamma_E_deg",
    "gamma_D_deg", "t_max"};

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& text,
                                   const std::string& origin) {
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  std::map<std::string, Line> kv;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(origin, number, "expected key=value, got '" + trim(raw) + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(origin, number, "empty key");
    if (kv.count(key)) fail(origin, number, "duplicate key '" + key + "'");
    kv.emplace(key, Line{number, key, value});
  }

  ScenarioConfig cfg;
  std::set<std::string> seen;
  auto take = [&](const std::string& key) -> const Line* {
    auto it = kv.find(key);
    if (it == kv.end()) return nullptr;
    seen.insert(key);
    return &it->second;
  };
  auto require = [&](const std::string& key) -> const Line& {
    const Line* l = take(key);
    if (!l) {
      std::ostringstream os;
      os << origin << ": missing required key '" << key
         << "'. Required keys are:";
      for (const auto& k : kRequiredKeys) os << " " << k;
      const bool info = kv.count("mode") && kv.at("mode").value ==
                                                "information_level";
      if (info) os << " t2 k3 K1";
      throw ConfigError(os.str());
    }
    return *l;
  };
  auto opt_double = [&](const std::string& key, double def) {
    const Line* l = take(key);
    return l ? parse_double(*l, origin) : def;
  };
  auto opt_int = [&](const std::string& key, int def) {
    const Line* l = take(key);
    return l ? parse_int(*l, origin) : def;
  };
  auto opt_bool = [&](const std::string& key, bool def) {
    const Line* l = take(key);
    return l ? parse_bool(*l, origin) : def;
  };

  {
    const Line& mode = require("mode");
    if (mode.value == "maneuver_level") {
      cfg.guidance.mode = CooperationMode::maneuver_level;
    } else if (mode.value == "information_level") {
      cfg.guidance.mode = CooperationMode::information_level;
    } else {
      fail(origin, mode.number, "unknown mode '" + mode.value + "'");
    }
  }
  if (const Line* l = take("name")) cfg.name = l->value;
  cfg.guidance.chi_star = deg_to_rad(parse_double(require("chi_star_deg"),
                                                  origin));
  cfg.guidance.t_star = parse_double(require("t_star"), origin);
  cfg.guidance.t1 = parse_double(require("t1"), origin);
  cfg.guidance.k1 = parse_int(require("k1"), origin);
  cfg.guidance.k2 = parse_int(require("k2"), origin);
  cfg.guidance.K = parse_double(require("K"), origin);
  cfg.guidance.sigma = opt_double("sigma", 1.0);
  cfg.guidance.boundary_layer = opt_double("boundary_layer", 1e-3);
  cfg.guidance.evader_passive = opt_bool("evader_passive", false);
  cfg.guidance.terminal_handoff_radius =
      opt_double("terminal_handoff_radius", 0.0);
  cfg.guidance.terminal_nav_constant =
      opt_double("terminal_nav_constant", 4.0);
  if (const Line* l = take("switching")) {
    if (l->value == "boundary_layer") {
      cfg.guidance.switching = SwitchingKind::boundary_layer;
    } else if (l->value == "sign") {
      cfg.guidance.switching = SwitchingKind::sign;
    } else {
      fail(origin, l->number, "unknown switching '" + l->value + "'");
    }
  }
  if (cfg.guidance.mode == CooperationMode::information_level) {
    cfg.guidance.t2 = parse_double(require("t2"), origin);
    cfg.guidance.k3 = parse_int(require("k3"), origin);
    cfg.guidance.K1 = parse_double(require("K1"), origin);
  } else {
    cfg.guidance.t2 = opt_double("t2", cfg.guidance.t2);
    cfg.guidance.k3 = opt_int("k3", cfg.guidance.k3);
    cfg.guidance.K1 = opt_double("K1", cfg.guidance.K1);
  }

  {
    const Line& law = require("pursuer_law");
    if (law.value == "png") cfg.law.kind = PursuerLawKind::png;
    else if (law.value == "ppg") cfg.law.kind = PursuerLawKind::ppg;
    else if (law.value == "dpg") cfg.law.kind = PursuerLawKind::dpg;
    else if (law.value == "bpng") cfg.law.kind = PursuerLawKind::bpng;
    else fail(origin, law.number, "unknown pursuer_law '" + law.value + "'");
  }
  cfg.law.nav_constant = opt_double("nav_constant", 3.0);
  cfg.law.pursuit_gain = opt_double("pursuit_gain", 0.1);
  cfg.law.deviation = deg_to_rad(opt_double("deviation_deg", 20.0));
  cfg.law.bias_gain = opt_double("bias_gain", 1.0);

  cfg.v_p = parse_double(require("v_P"), origin);
  cfg.v_e = parse_double(require("v_E"), origin);
  cfg.v_d = parse_double(require("v_D"), origin);
  cfg.lim_p.a_max = parse_double(require("a_max_P"), origin);
  cfg.lim_e.a_max = parse_double(require("a_max_E"), origin);
  cfg.lim_d.a_max = parse_double(require("a_max_D"), origin);
  cfg.pursuer_placement.range = parse_double(require("r_EP"), origin);
  cfg.pursuer_placement.los = deg_to_rad(parse_double(require("los_EP_deg"),
                                                      origin));
  cfg.defender_placement.range = parse_double(require("r_ED"), origin);
  cfg.defender_placement.los = deg_to_rad(parse_double(require("los_ED_deg"),
                                                       origin));
  cfg.gamma_p = deg_to_rad(parse_double(require("gamma_P_deg"), origin));
  cfg.gamma_e = deg_to_rad(parse_double(require("gamma_E_deg"), origin));
  cfg.gamma_d = deg_to_rad(parse_double(require("gamma_D_deg"), origin));

  cfg.sim.t_max = parse_double(require("t_max"), origin);
  cfg.sim.dt = opt_double("dt", 1e-3);
  cfg.sim.capture_radius = opt_double("capture_radius", 1.0);
  cfg.sim.evader_loss_radius =
      opt_double("evader_loss_radius", cfg.sim.capture_radius);
  cfg.sim.decimation = opt_int("decimation", 1);
  if (const Line* l = take("integrator")) {
    if (l->value == "rk4") cfg.sim.integrator = IntegratorKind::rk4;
    else if (l->value == "euler") cfg.sim.integrator = IntegratorKind::euler;
    else fail(origin, l->number, "unknown integrator '" + l->value + "'");
  }

  for (const auto& [key, line] : kv) {
    if (!seen.count(key)) {
      fail(origin, line.number, "unknown key '" + key + "'");
    }
  }

  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  return cfg;
}

ScenarioConfig parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path);
}

std::string serialize_scenario(const ScenarioConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "name = " << cfg.name << "\n";
  os << "mode = "
     << (cfg.guidance.mode == CooperationMode::maneuver_level
             ? "maneuver_level"
             : "information_level")
     << "\n";
  os << "chi_star_deg = " << rad_to_deg(cfg.guidance.chi_star) << "\n";
  os << "t_star = " << cfg.guidance.t_star << "\n";
  os << "t1 = " << cfg.guidance.t1 << "\n";
  os << "k1 = " << cfg.guidance.k1 << "\n";
  os << "k2 = " << cfg.guidance.k2 << "\n";
  os << "K = " << cfg.guidance.K << "\n";
  os << "sigma = " << cfg.guidance.sigma << "\n";
  os << "boundary_layer = " << cfg.guidance.boundary_layer << "\n";
  os << "switching = "
     << (cfg.guidance.switching == SwitchingKind::boundary_layer
             ? "boundary_layer"
             : "sign")
     << "\n";
  os << "evader_passive = " << (cfg.guidance.evader_passive ? "true" : "false")
     << "\n";
  os << "terminal_handoff_radius = " << cfg.guidance.terminal_handoff_radius
     << "\n";
  os << "terminal_nav_constant = " << cfg.guidance.terminal_nav_constant
     << "\n";
  os << "t2 = " << cfg.guidance.t2 << "\n";
  os << "k3 = " << cfg.guidance.k3 << "\n";
  os << "K1 = " << cfg.guidance.K1 << "\n";
  const char* law = "png";
  switch (cfg.law.kind) {
    case PursuerLawKind::png: law = "png"; break;
    case PursuerLawKind::ppg: law = "ppg"; break;
    case PursuerLawKind::dpg: law = "dpg"; break;
    case PursuerLawKind::bpng: law = "bpng"; break;
  }
  os << "pursuer_law = " << law << "\n";
  os << "nav_constant = " << cfg.law.nav_constant << "\n";
  os << "pursuit_gain = " << cfg.law.pursuit_gain << "\n";
  os << "deviation_deg = " << rad_to_deg(cfg.law.deviation) << "\n";
  os << "bias_gain = " << cfg.law.bias_gain << "\n";
  os << "v_P = " << cfg.v_p << "\nv_E = " << cfg.v_e << "\nv_D = " << cfg.v_d
     << "\n";
  os << "a_max_P = " << cfg.lim_p.a_max << "\na_max_E = " << cfg.lim_e.a_max
     << "\na_max_D = " << cfg.lim_d.a_max << "\n";
  os << "r_EP = " << cfg.pursuer_placement.range << "\n";
  os << "los_EP_deg = " << rad_to_deg(cfg.pursuer_placement.los) << "\n";
  os << "r_ED = " << cfg.defender_placement.range << "\n";
  os << "los_ED_deg = " << rad_to_deg(cfg.defender_placement.los) << "\n";
  os << "gamma_P_deg = " << rad_to_deg(cfg.gamma_p) << "\n";
  os << "gamma_E_deg = " << rad_to_deg(cfg.gamma_e) << "\n";
  os << "gamma_D_deg = " << rad_to_deg(cfg.gamma_d) << "\n";
  os << "t_max = " << cfg.sim.t_max << "\n";
  os << "dt = " << cfg.sim.dt << "\n";
  os << "capture_radius = " << cfg.sim.capture_radius << "\n";
  os << "evader_loss_radius = " << cfg.sim.evader_loss_radius << "\n";
  os << "decimation = " << cfg.sim.decimation << "\n";
  os << "integrator = "
     << (cfg.sim.integrator == IntegratorKind::rk4 ? "rk4" : "euler") << "\n";
  return os.str();
}

}  // namespace pursuit
