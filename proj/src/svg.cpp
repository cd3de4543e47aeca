#include <algorithm>
#include <iomanip>
#include <sstream>

#include "npival/case_io.hpp"

namespace npival {

namespace {

constexpr double kWidth = 480.0;
constexpr double kHeight = 360.0;
constexpr double kMargin = 24.0;

std::string points_attr(const Polygon& p, double x0, double y0, double sx, double sy) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  bool first = true;
  for (const auto& v : p.vertices()) {
    if (!first) os << ' ';
    first = false;
    os << kMargin + (v.x.get_d() - x0) * sx << ',' << kHeight - kMargin - (v.y.get_d() - y0) * sy;
  }
  return os.str();
}

}  // namespace

std::string render_svg(const Polygon& body, const Polygon& triangle) {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const auto& v : triangle.vertices()) {
    x0 = std::min(x0, v.x.get_d());
    x1 = std::max(x1, v.x.get_d());
    y0 = std::min(y0, v.y.get_d());
    y1 = std::max(y1, v.y.get_d());
  }
  const double sx = (kWidth - 2 * kMargin) / std::max(x1 - x0, 1e-12);
  const double sy = (kHeight - 2 * kMargin) / std::max(y1 - y0, 1e-12);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "  <polygon points=\"" << points_attr(triangle, x0, y0, sx, sy)
     << "\" fill=\"#d9e3f0\" stroke=\"#7f93ad\" stroke-width=\"1\"/>\n";
  os << "  <polygon points=\"" << points_attr(body, x0, y0, sx, sy)
     << "\" fill=\"#2b4c7e\" stroke=\"#1a2f4f\" stroke-width=\"1.5\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace npival
