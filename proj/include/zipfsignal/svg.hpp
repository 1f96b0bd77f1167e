#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace zipfsignal::svg {

struct ChartSeries {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

// A static multi-series line chart. Output is plain SVG text, rendered
// deterministically from the inputs (tests compare polyline structure).
class LineChart {
 public:
  LineChart(std::string title, int width = 960, int height = 480)
      : title_(std::move(title)), width_(width), height_(height) {}

  void add_series(ChartSeries series) { series_.push_back(std::move(series)); }

  // Rescale every series to [0,1] on the y axis before plotting, so series
  // with very different units (an exponent and an index level) overlay.
  void set_normalize_y(bool on) { normalize_y_ = on; }

  // Tick label for an x position (e.g. an ISO week string).
  void add_x_tick(double x, std::string label) {
    x_ticks_.emplace_back(x, std::move(label));
  }

  std::string render() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::string title_;
  int width_;
  int height_;
  bool normalize_y_ = false;
  std::vector<ChartSeries> series_;
  std::vector<std::pair<double, std::string>> x_ticks_;
};

}  // namespace zipfsignal::svg
