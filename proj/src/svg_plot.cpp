#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "anysort/bench.hpp"

namespace anysort {

namespace {

constexpr double kWidth = 960;
constexpr double kHeight = 560;
constexpr double kLeft = 80;
constexpr double kRight = 230;
constexpr double kTop = 50;
constexpr double kBottom = 70;
constexpr std::size_t kMaxPoints = 1500;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#f68412",
                                    "#0f0f0f", "#984e2e", "#17becf", "#bcbd22", "#e377c2"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Series {
  std::string name;
  // x -> value per level, levels ascending
  std::map<double, std::map<double, double>> points;
};

}  // namespace

std::string render_svg(std::vector<ResultRow> rows) {
  if (rows.empty()) throw std::invalid_argument("render_svg: no rows");
  sort_rows(rows);
  const bool profile_mode = rows.front().step.has_value();
  std::set<std::size_t> sizes;
  for (const ResultRow& r : rows) {
    if (r.step.has_value() != profile_mode) {
      throw std::invalid_argument("render_svg: rows mix termination and profile results");
    }
    sizes.insert(r.n);
  }

  std::vector<Series> series;
  std::map<std::tuple<std::string, std::string, std::size_t>, std::size_t> index;
  for (const ResultRow& r : rows) {
    const std::size_t n_key = profile_mode ? r.n : 0;
    auto [it, fresh] = index.try_emplace({r.algorithm, r.estimator, n_key}, series.size());
    if (fresh) {
      std::string name = r.algorithm + ":" + r.estimator;
      if (profile_mode && sizes.size() > 1) name += " (n=" + std::to_string(r.n) + ")";
      series.push_back(Series{name, {}});
    }
    const double x = profile_mode ? static_cast<double>(*r.step) : static_cast<double>(r.n);
    series[it->second].points[x][r.quantile] = r.value;
  }

  double x_min = series.front().points.begin()->first;
  double x_max = x_min;
  double y_min = profile_mode ? 0.0 : rows.front().value;
  double y_max = y_min;
  for (const Series& s : series) {
    x_min = std::min(x_min, s.points.begin()->first);
    x_max = std::max(x_max, s.points.rbegin()->first);
    for (const auto& [x, levels] : s.points) {
      for (const auto& [level, v] : levels) {
        y_min = std::min(y_min, v);
        y_max = std::max(y_max, v);
      }
    }
  }
  if (!profile_mode) {
    y_min = std::min(y_min, 0.0);
  }
  if (y_max - y_min < 1e-12) y_max = y_min + 1.0;
  const double pad = 0.05 * (y_max - y_min);
  if (!profile_mode) y_min -= pad;
  y_max += pad;

  const auto tx = [&](double x) {
    const double lo = profile_mode ? x_min : std::log10(x_min);
    const double hi = profile_mode ? x_max : std::log10(x_max);
    const double v = profile_mode ? x : std::log10(x);
    const double t = hi > lo ? (v - lo) / (hi - lo) : 0.5;
    return kLeft + t * (kWidth - kLeft - kRight);
  };
  const auto ty = [&](double y) {
    return kHeight - kBottom - (y - y_min) / (y_max - y_min) * (kHeight - kTop - kBottom);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
         fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
         "\" fill=\"white\"/>\n";
  const std::string title = profile_mode ? "Performance profiles (normalized Kendall tau)"
                                         : "Comparisons above the lower bound (%)";
  svg += "<text x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop - 20) +
         "\" font-family=\"sans-serif\" font-size=\"16\">" + escape(title) + "</text>\n";

  // Axes and ticks.
  const double plot_right = kWidth - kRight;
  const double plot_bottom = kHeight - kBottom;
  svg += "<g stroke=\"#b0b0b0\" stroke-width=\"1\" fill=\"none\">\n";
  svg += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" +
         fmt(plot_right - kLeft) + "\" height=\"" + fmt(plot_bottom - kTop) + "\"/>\n";
  svg += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  std::vector<double> x_ticks;
  if (profile_mode) {
    for (int t = 0; t <= 5; ++t) x_ticks.push_back(std::round(x_min + (x_max - x_min) * t / 5.0));
  } else {
    for (const std::size_t n : sizes) x_ticks.push_back(static_cast<double>(n));
  }
  for (const double x : x_ticks) {
    svg += "<line x1=\"" + fmt(tx(x)) + "\" y1=\"" + fmt(plot_bottom) + "\" x2=\"" + fmt(tx(x)) +
           "\" y2=\"" + fmt(plot_bottom + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(tx(x)) + "\" y=\"" + fmt(plot_bottom + 18) +
           "\" text-anchor=\"middle\">" + label(x) + "</text>\n";
  }
  for (int t = 0; t <= 5; ++t) {
    const double y = y_min + (y_max - y_min) * t / 5.0;
    svg += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(ty(y)) + "\" x2=\"" + fmt(kLeft) +
           "\" y2=\"" + fmt(ty(y)) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(ty(y) + 4) +
           "\" text-anchor=\"end\">" + label(y) + "</text>\n";
  }
  svg += "<text x=\"" + fmt((kLeft + plot_right) / 2) + "\" y=\"" + fmt(kHeight - 25) +
         "\" text-anchor=\"middle\">" +
         (profile_mode ? std::string("comparisons k") : std::string("n (log scale)")) +
         "</text>\n</g>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const Series& ser = series[s];
    const char* color = kPalette[s % std::size(kPalette)];
    std::vector<const std::pair<const double, std::map<double, double>>*> pts;
    const std::size_t stride = (ser.points.size() + kMaxPoints - 1) / kMaxPoints;
    std::size_t k = 0;
    for (const auto& entry : ser.points) {
      if (k % stride == 0 || k + 1 == ser.points.size()) pts.push_back(&entry);
      ++k;
    }
    std::vector<double> levels;
    for (const auto& [level, v] : pts.front()->second) levels.push_back(level);
    const auto value_at = [&](std::size_t p, double level) {
      const auto& m = pts[p]->second;
      const auto it = m.find(level);
      return it == m.end() ? 0.0 : it->second;
    };

    svg += "<g>\n";
    // Bands pair levels from the outside in; inner bands are more opaque.
    for (std::size_t b = 0; b < levels.size() / 2; ++b) {
      const double lo = levels[b];
      const double hi = levels[levels.size() - 1 - b];
      const double opacity = 0.15 + 0.15 * static_cast<double>(b);
      std::string points;
      for (std::size_t p = 0; p < pts.size(); ++p) {
        points += fmt(tx(pts[p]->first)) + "," + fmt(ty(value_at(p, hi))) + " ";
      }
      for (std::size_t p = pts.size(); p-- > 0;) {
        points += fmt(tx(pts[p]->first)) + "," + fmt(ty(value_at(p, lo))) + " ";
      }
      points.pop_back();
      svg += "<polygon points=\"" + points + "\" fill=\"" + color + "\" fill-opacity=\"" +
             fmt(opacity) + "\" stroke=\"none\"/>\n";
    }
    const double mid_level = std::find(levels.begin(), levels.end(), 0.5) != levels.end()
                                 ? 0.5
                                 : levels[levels.size() / 2];
    std::string line;
    for (std::size_t p = 0; p < pts.size(); ++p) {
      line += fmt(tx(pts[p]->first)) + "," + fmt(ty(value_at(p, mid_level))) + " ";
    }
    line.pop_back();
    svg += "<polyline points=\"" + line + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"1.5\"/>\n";
    if (!profile_mode) {
      for (std::size_t p = 0; p < pts.size(); ++p) {
        svg += "<circle cx=\"" + fmt(tx(pts[p]->first)) + "\" cy=\"" +
               fmt(ty(value_at(p, mid_level))) + "\" r=\"2\" fill=\"" + color + "\"/>\n";
      }
    }
    const double ly = kTop + 10 + 20 * static_cast<double>(s);
    svg += "<line x1=\"" + fmt(plot_right + 15) + "\" y1=\"" + fmt(ly) + "\" x2=\"" +
           fmt(plot_right + 40) + "\" y2=\"" + fmt(ly) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fmt(plot_right + 46) + "\" y=\"" + fmt(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(ser.name) + "</text>\n";
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void emit_plot(const std::vector<ResultRow>& rows, const std::string& path) {
  const std::string svg = render_svg(rows);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << svg;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace anysort
