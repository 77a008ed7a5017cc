#include "pursuit/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace pursuit {

namespace {

struct Series {
  std::string label;
  std::string color;
  std::vector<double> x, y;
};

struct Bounds {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void expand(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }

  void pad(double frac) {
    const double dx = std::max(xmax - xmin, 1e-9) * frac;
    const double dy = std::max(ymax - ymin, 1e-9) * frac;
    xmin -= dx;
    xmax += dx;
    ymin -= dy;
    ymax += dy;
  }
};

constexpr int kWidth = 760;
constexpr int kHeight = 520;
constexpr int kMarginL = 70;
constexpr int kMarginR = 20;
constexpr int kMarginT = 40;
constexpr int kMarginB = 50;

class Canvas {
 public:
  Canvas(const Bounds& b, std::string title, std::string xlabel,
         std::string ylabel)
      : b_(b) {
    os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    os_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os_ << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title
        << "</text>\n";
    axes(xlabel, ylabel);
  }

  double px(double x) const {
    return kMarginL +
           (x - b_.xmin) / (b_.xmax - b_.xmin) * (kWidth - kMarginL - kMarginR);
  }
  double py(double y) const {
    return kHeight - kMarginB -
           (y - b_.ymin) / (b_.ymax - b_.ymin) *
               (kHeight - kMarginT - kMarginB);
  }

  void polyline(const Series& s) {
    os_ << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      os_ << px(s.x[i]) << "," << py(s.y[i]) << " ";
    }
    os_ << "\"/>\n";
  }

  void marker(double x, double y, const std::string& color,
              const std::string& shape) {
    if (shape == "square") {
      os_ << "<rect x=\"" << px(x) - 4 << "\" y=\"" << py(y) - 4
          << "\" width=\"8\" height=\"8\" fill=\"none\" stroke=\"" << color
          << "\"/>\n";
    } else {  // star-ish capture marker
      os_ << "<g stroke=\"" << color << "\" stroke-width=\"1.5\">"
          << "<line x1=\"" << px(x) - 5 << "\" y1=\"" << py(y) - 5
          << "\" x2=\"" << px(x) + 5 << "\" y2=\"" << py(y) + 5 << "\"/>"
          << "<line x1=\"" << px(x) - 5 << "\" y1=\"" << py(y) + 5
          << "\" x2=\"" << px(x) + 5 << "\" y2=\"" << py(y) - 5 << "\"/>"
          << "<line x1=\"" << px(x) << "\" y1=\"" << py(y) - 6 << "\" x2=\""
          << px(x) << "\" y2=\"" << py(y) + 6 << "\"/></g>\n";
    }
  }

  void legend(const std::vector<Series>& series) {
    int y = kMarginT + 8;
    for (const Series& s : series) {
      os_ << "<line x1=\"" << kMarginL + 10 << "\" y1=\"" << y << "\" x2=\""
          << kMarginL + 40 << "\" y2=\"" << y << "\" stroke=\"" << s.color
          << "\" stroke-width=\"2\"/>\n";
      os_ << "<text x=\"" << kMarginL + 46 << "\" y=\"" << y + 4
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label
          << "</text>\n";
      y += 18;
    }
  }

  void save(const std::string& path) {
    os_ << "</svg>\n";
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot open '" + path + "' for writing");
    f << os_.str();
  }

 private:
  void axes(const std::string& xlabel, const std::string& ylabel) {
    os_ << "<rect x=\"" << kMarginL << "\" y=\"" << kMarginT << "\" width=\""
        << kWidth - kMarginL - kMarginR << "\" height=\""
        << kHeight - kMarginT - kMarginB
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
      const double fx = b_.xmin + (b_.xmax - b_.xmin) * i / 5.0;
      const double fy = b_.ymin + (b_.ymax - b_.ymin) * i / 5.0;
      os_ << "<text x=\"" << px(fx) << "\" y=\"" << kHeight - kMarginB + 18
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"11\">"
          << format(fx) << "</text>\n";
      os_ << "<text x=\"" << kMarginL - 6 << "\" y=\"" << py(fy) + 4
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
             "font-size=\"11\">"
          << format(fy) << "</text>\n";
    }
    os_ << "<text x=\"" << (kMarginL + kWidth - kMarginR) / 2 << "\" y=\""
        << kHeight - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">"
        << xlabel << "</text>\n";
    os_ << "<text x=\"16\" y=\"" << (kMarginT + kHeight - kMarginB) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\" transform=\"rotate(-90 16 "
        << (kMarginT + kHeight - kMarginB) / 2 << ")\">" << ylabel
        << "</text>\n";
  }

  static std::string format(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
  }

  Bounds b_;
  std::ostringstream os_;
};

void plot_series(const std::vector<Series>& series, const std::string& title,
                 const std::string& xlabel, const std::string& ylabel,
                 const std::string& path) {
  Bounds b;
  for (const Series& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) b.expand(s.x[i], s.y[i]);
  }
  b.pad(0.05);
  Canvas c(b, title, xlabel, ylabel);
  for (const Series& s : series) c.polyline(s);
  c.legend(series);
  c.save(path);
}

}  // namespace

void plot_trajectories(const SimulationTrace& trace, const std::string& path) {
  Series p{"pursuer", "#c62828", {}, {}};
  Series e{"evader", "#1565c0", {}, {}};
  Series d{"defender", "#2e7d32", {}, {}};
  for (const TraceRow& row : trace.rows) {
    p.x.push_back(row.pursuer.x);
    p.y.push_back(row.pursuer.y);
    e.x.push_back(row.evader.x);
    e.y.push_back(row.evader.y);
    d.x.push_back(row.defender.x);
    d.y.push_back(row.defender.y);
  }
  Bounds b;
  for (const Series* s : {&p, &e, &d}) {
    for (std::size_t i = 0; i < s->x.size(); ++i) b.expand(s->x[i], s->y[i]);
  }
  b.pad(0.05);
  Canvas c(b, "Trajectories", "x [m]", "y [m]");
  for (const Series* s : {&p, &e, &d}) c.polyline(*s);
  if (!trace.rows.empty()) {
    const TraceRow& first = trace.rows.front();
    c.marker(first.pursuer.x, first.pursuer.y, "#c62828", "square");
    c.marker(first.evader.x, first.evader.y, "#1565c0", "square");
    c.marker(first.defender.x, first.defender.y, "#2e7d32", "square");
    if (trace.event.kind == EventKind::defender_captures_pursuer ||
        trace.event.kind == EventKind::pursuer_captures_evader) {
      const TraceRow& last = trace.rows.back();
      c.marker(last.pursuer.x, last.pursuer.y, "black", "star");
    }
  }
  c.legend({p, e, d});
  c.save(path);
}

void plot_manifolds(const SimulationTrace& trace, const std::string& path) {
  Series beta{"beta [rad]", "#6a1b9a", {}, {}};
  Series si{"S_inner [rad/s]", "#ef6c00", {}, {}};
  Series so{"S_outer [rad/s]", "#00838f", {}, {}};
  Series se{"S_E [rad/s]", "#558b2f", {}, {}};
  bool has_se = false;
  for (const TraceRow& row : trace.rows) {
    beta.x.push_back(row.t);
    beta.y.push_back(row.beta);
    si.x.push_back(row.t);
    si.y.push_back(row.s_inner);
    so.x.push_back(row.t);
    so.y.push_back(row.s_outer);
    if (std::isfinite(row.s_e)) {
      has_se = true;
      se.x.push_back(row.t);
      se.y.push_back(row.s_e);
    }
  }
  std::vector<Series> series = {beta, si, so};
  if (has_se) series.push_back(se);
  plot_series(series, "Sliding manifolds and error", "t [s]", "", path);
}

void plot_commands(const SimulationTrace& trace, const std::string& path) {
  Series ap{"a_P [m/s^2]", "#c62828", {}, {}};
  Series ae{"a_E [m/s^2]", "#1565c0", {}, {}};
  Series ad{"a_D [m/s^2]", "#2e7d32", {}, {}};
  Series u{"U", "#6a1b9a", {}, {}};
  bool has_u = false;
  for (const TraceRow& row : trace.rows) {
    ap.x.push_back(row.t);
    ap.y.push_back(row.cmd.a_p);
    ae.x.push_back(row.t);
    ae.y.push_back(row.cmd.a_e);
    ad.x.push_back(row.t);
    ad.y.push_back(row.cmd.a_d);
    if (std::isfinite(row.cmd.u)) {
      has_u = true;
      u.x.push_back(row.t);
      u.y.push_back(row.cmd.u);
    }
  }
  std::vector<Series> series = {ap, ae, ad};
  if (has_u) series.push_back(u);
  plot_series(series, "Steering commands", "t [s]", "", path);
}

}  // namespace pursuit
