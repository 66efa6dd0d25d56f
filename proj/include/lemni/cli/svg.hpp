#pragma once

#include <string>
#include <vector>

#include "lemni/complex_value.hpp"

namespace lemni::cli {

struct Polyline {
  std::string label;
  std::string color = "#1f77b4";
  std::vector<cplx> points;
  bool closed = false;
};

struct Marker {
  std::string label;
  std::string color = "#d62728";
  cplx at;
  double radius = 3.0;  // pixels
};

struct Scene {
  std::string title;
  std::vector<Polyline> curves;
  std::vector<Marker> markers;
};

/// Plain SVG 1.1. Polylines and markers share one world-to-pixel map with
/// y pointing up; a legend lists every labelled item once.
std::string render_svg(const Scene& scene, int width = 640, int height = 640);
void write_svg(const Scene& scene, const std::string& path);

}  // namespace lemni::cli
