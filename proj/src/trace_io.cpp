#include "pursuit/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "pursuit/engagement.hpp"

namespace pursuit {

namespace {

void put(std::ostream& out, double v, bool last = false) {
  if (std::isnan(v)) {
    out << (last ? "" : ",");
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf << (last ? "" : ",");
}

void put_pair(std::ostream& out, const PairState& p) {
  put(out, p.r);
  put(out, p.lambda);
  put(out, p.r_dot);
  put(out, p.lambda_dot);
}

}  // namespace

void write_csv(const SimulationTrace& trace, std::ostream& out) {
  out << kCsvHeader << "\n";
  for (const TraceRow& row : trace.rows) {
    put(out, row.t);
    put(out, row.pursuer.x);
    put(out, row.pursuer.y);
    put(out, row.pursuer.gamma);
    put(out, row.cmd.a_p);
    put(out, row.evader.x);
    put(out, row.evader.y);
    put(out, row.evader.gamma);
    put(out, row.cmd.a_e);
    put(out, row.defender.x);
    put(out, row.defender.y);
    put(out, row.defender.gamma);
    put(out, row.cmd.a_d);
    put_pair(out, row.ep);
    put_pair(out, row.dp);
    put_pair(out, row.ed);
    put(out, row.chi);
    put(out, row.beta);
    put(out, row.s_inner);
    put(out, row.s_outer);
    put(out, row.s_e);
    put(out, row.cmd.u, /*last=*/true);
    out << "\n";
  }
}

void write_csv(const SimulationTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  write_csv(trace, out);
}

SimulationTrace read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ConfigError("read_csv: bad or missing header");
  }
  SimulationTrace trace;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      f.push_back(cell.empty() ? std::nan("") : std::stod(cell));
    }
    while (f.size() < 31) f.push_back(std::nan(""));
    if (f.size() != 31) {
      throw ConfigError("read_csv: wrong field count at line " +
                        std::to_string(lineno));
    }
    TraceRow row;
    int i = 0;
    row.t = f[i++];
    row.pursuer.x = f[i++];
    row.pursuer.y = f[i++];
    row.pursuer.gamma = f[i++];
    row.cmd.a_p = row.cmd.raw_a_p = f[i++];
    row.evader.x = f[i++];
    row.evader.y = f[i++];
    row.evader.gamma = f[i++];
    row.cmd.a_e = row.cmd.raw_a_e = f[i++];
    row.defender.x = f[i++];
    row.defender.y = f[i++];
    row.defender.gamma = f[i++];
    row.cmd.a_d = row.cmd.raw_a_d = f[i++];
    auto read_pair = [&](PairState& p) {
      p.r = f[i++];
      p.lambda = f[i++];
      p.r_dot = f[i++];
      p.lambda_dot = f[i++];
    };
    read_pair(row.ep);
    read_pair(row.dp);
    read_pair(row.ed);
    row.chi = f[i++];
    row.beta = f[i++];
    row.s_inner = f[i++];
    row.s_outer = f[i++];
    row.s_e = f[i++];
    row.cmd.u = f[i++];

    const double chi = chi_angle(row.dp.lambda, row.ed.lambda);
    if (std::abs(wrap_pi(chi - row.chi)) > 1e-9) {
      throw ConfigError("read_csv: chi column inconsistent at line " +
                        std::to_string(lineno));
    }
    trace.rows.push_back(row);
  }
  return trace;
}

SimulationTrace read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  return read_csv(in);
}

}  // namespace pursuit
