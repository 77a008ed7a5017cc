#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pursuit/acceptance.hpp"
#include "pursuit/catalog.hpp"
#include "pursuit/scenario.hpp"
#include "pursuit/svg_plot.hpp"
#include "pursuit/trace_io.hpp"

namespace {

constexpr int kExitCapture = 0;
constexpr int kExitEvaderLost = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitConfig = 4;
constexpr int kExitNumerical = 5;

int exit_code_for(pursuit::EventKind kind) {
  switch (kind) {
    case pursuit::EventKind::defender_captures_pursuer: return kExitCapture;
    case pursuit::EventKind::pursuer_captures_evader: return kExitEvaderLost;
    case pursuit::EventKind::timeout: return kExitTimeout;
    case pursuit::EventKind::degenerate_geometry_abort: return kExitNumerical;
  }
  return kExitNumerical;
}

const char* event_name(pursuit::EventKind kind) {
  switch (kind) {
    case pursuit::EventKind::defender_captures_pursuer:
      return "defender_captures_pursuer";
    case pursuit::EventKind::pursuer_captures_evader:
      return "pursuer_captures_evader";
    case pursuit::EventKind::timeout: return "timeout";
    case pursuit::EventKind::degenerate_geometry_abort:
      return "degenerate_geometry_abort";
  }
  return "unknown";
}

pursuit::ScenarioConfig load_scenario(const std::string& source) {
  if (std::filesystem::exists(source)) return pursuit::parse_scenario(source);
  return pursuit::catalog_scenario(source);
}

std::string resolve_out_dir(const std::string& cli_out) {
  if (!cli_out.empty()) return cli_out;
  if (const char* env = std::getenv("PURSUIT_SIM_OUT")) return env;
  return ".";
}

void write_artifacts(const pursuit::SimulationTrace& trace,
                     const pursuit::ScenarioConfig& cfg,
                     const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::string stem = out_dir + "/" + cfg.name;
  if (cfg.output.write_csv) pursuit::write_csv(trace, stem + ".csv");
  if (cfg.output.write_svg) {
    pursuit::plot_trajectories(trace, stem + "_trajectories.svg");
    pursuit::plot_manifolds(trace, stem + "_manifolds.svg");
    pursuit::plot_commands(trace, stem + "_commands.svg");
  }
}

std::string summary_line(const pursuit::ScenarioConfig& cfg,
                         const pursuit::SimulationTrace& trace) {
  std::ostringstream os;
  os << cfg.name << ": " << event_name(trace.event.kind)
     << " t_f=" << trace.event.t_f << "s min_r_EP=" << trace.event.min_r_ep
     << "m";
  if (trace.fallback_allocations > 0) {
    os << " fallback_allocations=" << trace.fallback_allocations;
  }
  if (trace.degenerate_holds > 0) {
    os << " degenerate_holds=" << trace.degenerate_holds;
  }
  return os.str();
}

int run_one(pursuit::ScenarioConfig cfg, bool dry_run, double dt_override,
            const std::string& out_dir, std::string& summary) {
  if (dt_override > 0.0) cfg.sim.dt = dt_override;
  cfg.validate();
  if (dry_run) {
    summary = cfg.name + ": valid";
    return kExitCapture;
  }
  const pursuit::SimulationTrace trace = pursuit::run(cfg);
  write_artifacts(trace, cfg, out_dir);
  summary = summary_line(cfg, trace);
  return exit_code_for(trace.event.kind);
}

struct SweepCase {
  pursuit::ScenarioConfig cfg;
  std::string summary;
  int code = kExitConfig;
};

// Applies one key=value override by rewriting the serialized scenario, so the
// sweep accepts exactly the scenario-file keys.
pursuit::ScenarioConfig with_override(const pursuit::ScenarioConfig& base,
                                      const std::string& key,
                                      const std::string& value) {
  std::istringstream in(pursuit::serialize_scenario(base));
  std::ostringstream out;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  std::string line;
  bool replaced = false;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq != std::string::npos && trim(line.substr(0, eq)) == key) {
      out << key << "=" << value << "\n";
      replaced = true;
    } else {
      out << line << "\n";
    }
  }
  if (!replaced) out << key << "=" << value << "\n";
  return pursuit::parse_scenario_text(out.str(), "<sweep override>");
}

int run_sweep(const pursuit::ScenarioConfig& base, const std::string& vary,
              int jobs, const std::string& out_dir) {
  const auto eq = vary.find('=');
  if (eq == std::string::npos) {
    std::cerr << "error: --vary expects key=v1,v2,...\n";
    return kExitConfig;
  }
  const std::string key = vary.substr(0, eq);
  std::vector<SweepCase> cases;
  std::istringstream values(vary.substr(eq + 1));
  std::string value;
  while (std::getline(values, value, ',')) {
    SweepCase c;
    c.cfg = with_override(base, key, value);
    c.cfg.name = base.name + "_" + key + "_" + value;
    cases.push_back(std::move(c));
  }
  if (cases.empty()) {
    std::cerr << "error: --vary lists no values\n";
    return kExitConfig;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < cases.size();
         i = next.fetch_add(1)) {
      SweepCase& c = cases[i];
      try {
        c.code = run_one(c.cfg, false, 0.0, out_dir, c.summary);
      } catch (const std::exception& ex) {
        c.summary = c.cfg.name + ": error: " + ex.what();
        c.code = kExitNumerical;
      }
    }
  };
  const int n_threads =
      std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
  std::vector<std::thread> threads;
  for (int i = 0; i < n_threads; ++i) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();

  int worst = kExitCapture;
  for (const SweepCase& c : cases) {
    std::cout << c.summary << "\n";
    worst = std::max(worst, c.code);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooperative three-body pursuit-evasion guidance simulator"};
  app.require_subcommand(1);

  std::string scenario_source, out_dir_opt, vary, suite = "all";
  bool dry_run = false;
  double dt_override = 0.0;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  CLI::App* cmd_run = app.add_subcommand("run", "Run one scenario");
  cmd_run->add_option("file", scenario_source,
                      "Scenario file path or catalog entry name")
      ->required();
  cmd_run->add_flag("--dry-run", dry_run, "Validate only, write no files");
  cmd_run->add_option("--dt", dt_override, "Override the integration step [s]");
  cmd_run->add_option("--out", out_dir_opt, "Output directory");

  CLI::App* cmd_sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  cmd_sweep->add_option("file", scenario_source,
                        "Scenario file path or catalog entry name")
      ->required();
  cmd_sweep->add_option("--vary", vary, "key=v1,v2,... scenario override")
      ->required();
  cmd_sweep->add_option("--jobs", jobs, "Concurrent runs");
  cmd_sweep->add_option("--out", out_dir_opt, "Output directory");

  CLI::App* cmd_accept =
      app.add_subcommand("accept", "Run an acceptance suite");
  cmd_accept->add_option("suite", suite,
                         "One of maneuver, info, properties, all");

  CLI::App* cmd_catalog =
      app.add_subcommand("catalog", "List the shipped scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string out_dir = resolve_out_dir(out_dir_opt);
    if (cmd_run->parsed()) {
      std::string summary;
      const int code = run_one(load_scenario(scenario_source), dry_run,
                               dt_override, out_dir, summary);
      std::cout << summary << "\n";
      return code;
    }
    if (cmd_sweep->parsed()) {
      return run_sweep(load_scenario(scenario_source), vary, jobs, out_dir);
    }
    if (cmd_accept->parsed()) {
      const auto results = pursuit::acceptance::run_suite(suite);
      return pursuit::acceptance::report(results, std::cout) ? kExitCapture
                                                             : kExitConfig;
    }
    if (cmd_catalog->parsed()) {
      for (const pursuit::CatalogEntry& entry : pursuit::catalog()) {
        std::cout << entry.name << "  " << entry.description << "\n";
      }
      return kExitCapture;
    }
  } catch (const pursuit::ConfigError& ex) {
    std::cerr << "config error: " << ex.what() << "\n";
    return kExitConfig;
  } catch (const pursuit::NumericalDivergenceError& ex) {
    std::cerr << "numerical abort: " << ex.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}
