#include "zipfsignal/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "zipfsignal/errors.hpp"

namespace zipfsignal::svg {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

}  // namespace

std::string LineChart::render() const {
  const double margin_left = 64, margin_right = 16, margin_top = 40,
               margin_bottom = 44;
  const double plot_w = width_ - margin_left - margin_right;
  const double plot_h = height_ - margin_top - margin_bottom;

  // Normalized copies when requested.
  std::vector<ChartSeries> plotted = series_;
  if (normalize_y_) {
    for (ChartSeries& s : plotted) {
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (const auto& [x, y] : s.points) {
        lo = std::min(lo, y);
        hi = std::max(hi, y);
      }
      const double span = hi - lo;
      for (auto& [x, y] : s.points) {
        y = span > 0 ? (y - lo) / span : 0.5;
      }
    }
  }

  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  bool any = false;
  for (const ChartSeries& s : plotted) {
    for (const auto& [x, y] : s.points) {
      if (!any) {
        min_x = max_x = x;
        min_y = max_y = y;
        any = true;
      } else {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
      }
    }
  }
  if (max_x <= min_x) max_x = min_x + 1;
  if (max_y <= min_y) max_y = min_y + 1;

  const auto to_px = [&](double x, double y) {
    const double px = margin_left + (x - min_x) / (max_x - min_x) * plot_w;
    const double py = margin_top + (1.0 - (y - min_y) / (max_y - min_y)) * plot_h;
    return std::pair<double, double>(px, py);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width_) + "\" height=\"" + std::to_string(height_) +
         "\" viewBox=\"0 0 " + std::to_string(width_) + " " +
         std::to_string(height_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt(width_ / 2.0) +
         "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">" +
         escape(title_) + "</text>\n";

  // Axes.
  out += "<line x1=\"" + fmt(margin_left) + "\" y1=\"" + fmt(margin_top) +
         "\" x2=\"" + fmt(margin_left) + "\" y2=\"" +
         fmt(margin_top + plot_h) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + fmt(margin_left) + "\" y1=\"" + fmt(margin_top + plot_h) +
         "\" x2=\"" + fmt(margin_left + plot_w) + "\" y2=\"" +
         fmt(margin_top + plot_h) + "\" stroke=\"black\"/>\n";

  // Y ticks.
  for (int k = 0; k <= 4; ++k) {
    const double y = min_y + (max_y - min_y) * k / 4.0;
    const auto [px, py] = to_px(min_x, y);
    out += "<line x1=\"" + fmt(margin_left - 4) + "\" y1=\"" + fmt(py) +
           "\" x2=\"" + fmt(margin_left) + "\" y2=\"" + fmt(py) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt(margin_left - 8) + "\" y=\"" + fmt(py + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" +
           fmt_tick(y) + "</text>\n";
  }

  // X ticks (caller supplied).
  for (const auto& [x, label] : x_ticks_) {
    if (x < min_x || x > max_x) continue;
    const auto [px, py] = to_px(x, min_y);
    out += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(margin_top + plot_h) +
           "\" x2=\"" + fmt(px) + "\" y2=\"" + fmt(margin_top + plot_h + 4) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(margin_top + plot_h + 16) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"10\">" +
           escape(label) + "</text>\n";
  }

  // Series polylines and legend.
  double legend_x = margin_left + 8;
  for (const ChartSeries& s : plotted) {
    if (!s.points.empty()) {
      std::string points;
      for (const auto& [x, y] : s.points) {
        const auto [px, py] = to_px(x, y);
        points += fmt(px) + "," + fmt(py) + " ";
      }
      if (!points.empty()) points.pop_back();
      out += "<polyline fill=\"none\" stroke=\"" + s.color +
             "\" stroke-width=\"1.5\" data-series=\"" + escape(s.label) +
             "\" data-points=\"" + std::to_string(s.points.size()) +
             "\" points=\"" + points + "\"/>\n";
    }
    out += "<rect x=\"" + fmt(legend_x) + "\" y=\"" + fmt(margin_top - 14) +
           "\" width=\"10\" height=\"10\" fill=\"" + s.color + "\"/>\n";
    out += "<text x=\"" + fmt(legend_x + 14) + "\" y=\"" + fmt(margin_top - 5) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(s.label) +
           "</text>\n";
    legend_x += 14 + 7.0 * static_cast<double>(s.label.size()) + 24;
  }

  out += "</svg>\n";
  return out;
}

void LineChart::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write chart: " + path.string());
  out << render();
  if (!out) throw DataError("I/O failure writing: " + path.string());
}

}  // namespace zipfsignal::svg
