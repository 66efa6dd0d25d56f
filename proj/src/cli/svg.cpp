#include "lemni/cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "lemni/error.hpp"

namespace lemni::cli {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct View {
  double x0, y0, scale, pad, height;
  double px(cplx z) const { return pad + (z.real() - x0) * scale; }
  double py(cplx z) const { return height - pad - (z.imag() - y0) * scale; }
};

}  // namespace

std::string render_svg(const Scene& scene, int width, int height) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  if (!scene.title.empty()) os << "<title>" << escape(scene.title) << "</title>\n";

  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo, ylo = xlo, yhi = -xlo;
  auto grow = [&](cplx z) {
    if (!is_finite(z)) return;
    xlo = std::min(xlo, z.real());
    xhi = std::max(xhi, z.real());
    ylo = std::min(ylo, z.imag());
    yhi = std::max(yhi, z.imag());
  };
  for (const auto& c : scene.curves)
    for (cplx z : c.points) grow(z);
  for (const auto& m : scene.markers) grow(m.at);

  if (xlo > xhi) {  // nothing finite to draw
    os << "</svg>\n";
    return os.str();
  }
  const double pad = 24.0;
  double span = std::max(xhi - xlo, yhi - ylo);
  if (span <= 0.0) span = 1.0;
  const double scale = (std::min(width, height) - 2 * pad) / span;
  View v{xlo, ylo, scale, pad, static_cast<double>(height)};

  os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  for (const auto& c : scene.curves) {
    os << "<" << (c.closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\"" << escape(c.color)
       << "\" stroke-width=\"1.2\" points=\"";
    bool first = true;
    for (cplx z : c.points) {
      if (!is_finite(z)) continue;
      if (!first) os << ' ';
      os << num(v.px(z)) << ',' << num(v.py(z));
      first = false;
    }
    os << "\"/>\n";
  }
  for (const auto& m : scene.markers) {
    if (!is_finite(m.at)) continue;
    os << "<circle cx=\"" << num(v.px(m.at)) << "\" cy=\"" << num(v.py(m.at)) << "\" r=\"" << num(m.radius)
       << "\" fill=\"" << escape(m.color) << "\"/>\n";
  }

  // legend
  std::set<std::string> seen;
  double y = 16.0;
  auto entry = [&](const std::string& label, const std::string& color) {
    if (label.empty() || !seen.insert(label).second) return;
    os << "<rect x=\"8\" y=\"" << num(y - 8) << "\" width=\"10\" height=\"10\" fill=\"" << escape(color)
       << "\"/><text x=\"22\" y=\"" << num(y) << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(label)
       << "</text>\n";
    y += 14.0;
  };
  for (const auto& c : scene.curves) entry(c.label, c.color);
  for (const auto& m : scene.markers) entry(m.label, m.color);

  os << "</svg>\n";
  return os.str();
}

void write_svg(const Scene& scene, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ConfigError, "cannot write " + path);
  out << render_svg(scene);
}

}  // namespace lemni::cli
