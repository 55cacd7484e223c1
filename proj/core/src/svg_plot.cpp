#include "enclose/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <string>

namespace enclose {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
constexpr std::size_t kMaxPolylinePoints = 2000;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

const char* color(std::size_t i) { return kPalette[i % kPaletteSize]; }

std::size_t stride(std::size_t count) {
  return std::max<std::size_t>(1, (count + kMaxPolylinePoints - 1) / kMaxPolylinePoints);
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool empty() const { return !(lo <= hi); }
  void pad() {
    if (empty()) {
      lo = 0.0;
      hi = 1.0;
    }
    const double span = hi - lo;
    const double margin = span > 0.0 ? 0.05 * span : std::max(1.0, std::abs(lo) * 0.05);
    lo -= margin;
    hi += margin;
  }
};

void header(std::ostream& out, int width, int height) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

void write_trajectories_svg(std::ostream& out, const Scenario& scenario, const SimTrace& trace) {
  constexpr int kSize = 800;
  constexpr double kMargin = 40.0;
  const double orbit =
      scenario.agents.empty() ? 0.0 : scenario.agents.front().guidance.desired_range;

  Range xs, ys;
  xs.add(scenario.target.x - orbit);
  xs.add(scenario.target.x + orbit);
  ys.add(scenario.target.y - orbit);
  ys.add(scenario.target.y + orbit);
  for (const auto& row : trace.samples) {
    for (const AgentSample& s : row) {
      xs.add(s.state.x);
      ys.add(s.state.y);
    }
  }
  xs.pad();
  ys.pad();
  const double span = std::max(xs.hi - xs.lo, ys.hi - ys.lo);
  const double scale = (kSize - 2.0 * kMargin) / span;
  const double cx = 0.5 * (xs.lo + xs.hi);
  const double cy = 0.5 * (ys.lo + ys.hi);
  auto px = [&](double x) { return kSize / 2.0 + (x - cx) * scale; };
  auto py = [&](double y) { return kSize / 2.0 - (y - cy) * scale; };

  header(out, kSize, kSize);
  out << "<circle cx=\"" << num(px(scenario.target.x)) << "\" cy=\"" << num(py(scenario.target.y))
      << "\" r=\"" << num(orbit * scale)
      << "\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"6 4\"/>\n";
  out << "<path d=\"M " << num(px(scenario.target.x) - 6) << ' ' << num(py(scenario.target.y))
      << " h 12 M " << num(px(scenario.target.x)) << ' ' << num(py(scenario.target.y) - 6)
      << " v 12\" stroke=\"black\" stroke-width=\"2\"/>\n";

  const std::size_t n = trace.ids.size();
  const std::size_t count = trace.samples.size();
  const std::size_t every = stride(count);
  for (std::size_t i = 0; i < n && count > 0; ++i) {
    out << "<polyline fill=\"none\" stroke=\"" << color(i) << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t k = 0; k < count; k += every) {
      const AgentState& s = trace.samples[k][i].state;
      out << num(px(s.x)) << ',' << num(py(s.y)) << ' ';
    }
    const AgentState& last = trace.samples.back()[i].state;
    out << num(px(last.x)) << ',' << num(py(last.y)) << "\"/>\n";

    const AgentState& first = trace.samples.front()[i].state;
    out << "<rect x=\"" << num(px(first.x) - 4) << "\" y=\"" << num(py(first.y) - 4)
        << "\" width=\"8\" height=\"8\" fill=\"" << color(i) << "\"/>\n";
    out << "<circle cx=\"" << num(px(last.x)) << "\" cy=\"" << num(py(last.y))
        << "\" r=\"4.5\" fill=\"none\" stroke=\"" << color(i) << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << num(px(first.x) + 6) << "\" y=\"" << num(py(first.y) - 6)
        << "\" font-family=\"sans-serif\" font-size=\"11\">P" << trace.ids[i] << "</text>\n";
  }
  out << "</svg>\n";
}

void write_timeseries_svg(std::ostream& out, const SimTrace& trace) {
  constexpr int kWidth = 900;
  constexpr int kPanelHeight = 200;
  constexpr double kLeft = 70.0, kRight = 20.0, kTop = 25.0, kBottom = 25.0;

  struct Panel {
    const char* title;
    std::function<double(std::size_t k, std::size_t i)> value;
    bool per_agent;
  };
  const Panel panels[] = {
      {"e_i [m]", [&](std::size_t k, std::size_t i) { return trace.samples[k][i].range_error; }, true},
      {"S_i [m/s]", [&](std::size_t k, std::size_t i) { return trace.samples[k][i].control.manifold; }, true},
      {"a_i [m/s^2]", [&](std::size_t k, std::size_t i) { return trace.samples[k][i].control.accel; }, true},
      {"min r_ij [m]", [&](std::size_t k, std::size_t) { return trace.min_separation[k]; }, false},
  };
  constexpr int kPanels = 4;

  const std::size_t count = trace.times.size();
  const std::size_t n = trace.ids.size();
  const std::size_t every = stride(count);
  const double t0 = count ? trace.times.front() : 0.0;
  const double t1 = count > 1 ? trace.times.back() : t0 + 1.0;

  header(out, kWidth, kPanelHeight * kPanels);
  for (int p = 0; p < kPanels; ++p) {
    const Panel& panel = panels[p];
    const std::size_t series = panel.per_agent ? n : 1;
    Range yr;
    for (std::size_t k = 0; k < count; k += every) {
      for (std::size_t i = 0; i < series; ++i) yr.add(panel.value(k, i));
    }
    const bool has_data = !yr.empty();
    if (panel.per_agent || has_data) {
      if (!panel.per_agent) yr.add(0.0);
      yr.pad();
    }

    const double top = p * kPanelHeight + kTop;
    const double height = kPanelHeight - kTop - kBottom;
    const double width = kWidth - kLeft - kRight;
    auto px = [&](double t) { return kLeft + (t - t0) / (t1 - t0) * width; };
    auto py = [&](double v) { return top + (yr.hi - v) / (yr.hi - yr.lo) * height; };

    out << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(top) << "\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(kLeft) << "\" y=\"" << num(top - 8)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << panel.title << "</text>\n";
    if (!panel.per_agent && !has_data) {
      out << "<text x=\"" << num(kLeft + 10) << "\" y=\"" << num(top + height / 2)
          << "\" font-family=\"sans-serif\" font-size=\"11\">no pairs</text>\n";
      continue;
    }
    for (double v : {yr.lo, yr.hi}) {
      out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(v) + 4)
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << label(v)
          << "</text>\n";
    }
    if (yr.lo < 0.0 && yr.hi > 0.0) {
      out << "<line x1=\"" << num(kLeft) << "\" x2=\"" << num(kLeft + width) << "\" y1=\""
          << num(py(0.0)) << "\" y2=\"" << num(py(0.0))
          << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (std::size_t i = 0; i < series; ++i) {
      out << "<polyline fill=\"none\" stroke=\"" << (panel.per_agent ? color(i) : "black")
          << "\" stroke-width=\"1\" points=\"";
      for (std::size_t k = 0; k < count; k += every) {
        const double v = panel.value(k, i);
        if (std::isfinite(v)) out << num(px(trace.times[k])) << ',' << num(py(v)) << ' ';
      }
      out << "\"/>\n";
    }
  }
  const double axis_y = kPanels * kPanelHeight - 6.0;
  out << "<text x=\"" << num(kLeft) << "\" y=\"" << num(axis_y)
      << "\" font-family=\"sans-serif\" font-size=\"10\">t = " << label(t0) << " s</text>\n";
  out << "<text x=\"" << num(kWidth - kRight) << "\" y=\"" << num(axis_y)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">t = " << label(t1)
      << " s</text>\n";
  out << "</svg>\n";
}

}  // namespace enclose
