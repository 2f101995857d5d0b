#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace lpr::pipeline {

/// Minimal SVG scatter/line plot writer. Data coordinates are autoscaled
/// into the canvas; group indices cycle through a fixed palette. Output is
/// plain enough to assert on by counting elements.
class SvgPlot {
 public:
  SvgPlot(int width = 640, int height = 480);

  void set_title(const std::string& title);
  void set_axis_labels(const std::string& x, const std::string& y);
  void add_point(double x, double y, int group = 0);
  void add_line(const std::vector<std::pair<double, double>>& points, int group = 0);

  std::string render() const;
  void write(const std::filesystem::path& path) const;

 private:
  struct Marker {
    double x, y;
    int group;
  };
  int width_;
  int height_;
  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<Marker> markers_;
  std::vector<std::pair<std::vector<std::pair<double, double>>, int>> lines_;
};

}  // namespace lpr::pipeline
