#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sigtqft::svg {

struct Point {
  double x = 0, y = 0;
};

struct ScatterSpec {
  std::string title;
  std::vector<Point> dots;      // red markers
  std::vector<Point> curve;     // optional green polyline, sorted by x
  int width = 900;
  int height = 600;
};

/// Self-contained SVG scatter plot with axes and tick labels.
void write_scatter(std::ostream& os, const ScatterSpec& spec);

}  // namespace sigtqft::svg
