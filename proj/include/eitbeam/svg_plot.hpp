#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace eitbeam {

struct PlotSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string label;
  std::string color = "#1f77b4";
  bool points = false;  // draw markers instead of a line
};

struct PlotPanel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

// Self-contained static SVG with one or more vertically stacked panels.
void write_svg_plot(const std::filesystem::path& path, std::span<const PlotPanel> panels,
                    int width = 900, int panel_height = 300);

}  // namespace eitbeam
