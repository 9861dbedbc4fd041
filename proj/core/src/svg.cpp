#include "cppg/service.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace cppg {

std::string render_svg(const CoveringPath& path, const GridSpec& grid, const SvgOptions& opt) {
  constexpr double kUnit = 16.0;
  constexpr double kMaxPx = 2000.0;
  constexpr double kPad = 8.0;
  const double n = static_cast<double>(grid.n());
  const double m = static_cast<double>(grid.m());
  const double scale = std::min(kUnit, (kMaxPx - 2 * kPad) / std::max(n, m));
  const double w = n * scale + 2 * kPad;
  const double h = m * scale + 2 * kPad;
  auto X = [&](const Rational& x) { return kPad + to_double(x) * scale; };
  auto Y = [&](const Rational& y) { return kPad + (m - to_double(y)) * scale; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n';
  os << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << w << R"(" height=")" << h << R"(" viewBox="0 0 )" << w
     << ' ' << h << R"(">)" << '\n';
  os << R"(<rect x="0" y="0" width=")" << w << R"(" height=")" << h << R"(" fill="white"/>)" << '\n';

  // Grid lines, thinned out when the cells get small.
  const std::int64_t step = std::max<std::int64_t>(1, static_cast<std::int64_t>(4.0 / scale));
  os << R"(<path stroke="#d0d0d0" stroke-width="0.5" fill="none" d=")";
  for (std::int64_t x = 0; x <= grid.n(); x += step) {
    os << 'M' << X(Rational(x)) << ' ' << Y(Rational(0)) << 'V' << Y(Rational(grid.m()));
  }
  for (std::int64_t y = 0; y <= grid.m(); y += step) {
    os << 'M' << X(Rational(0)) << ' ' << Y(Rational(y)) << 'H' << X(Rational(grid.n()));
  }
  os << R"("/>)" << '\n';
  os << R"(<rect x=")" << kPad << R"(" y=")" << kPad << R"(" width=")" << n * scale << R"(" height=")" << m * scale
     << R"(" fill="none" stroke="#808080" stroke-width="1"/>)" << '\n';

  if (opt.coverage) {
    const double r = to_double(opt.radius) * scale;
    os << R"(<g fill="#4a90d9" fill-opacity="0.25" stroke="none">)" << '\n';
    for (const auto& s : path.stops) {
      const double cx = X(s.x), cy = Y(s.y);
      os << R"(<polygon points=")" << cx - r << ',' << cy << ' ' << cx << ',' << cy - r << ' ' << cx + r << ',' << cy
         << ' ' << cx << ',' << cy + r << R"("/>)" << '\n';
    }
    os << "</g>\n";
  }

  if (path.waypoints.size() > 1) {
    os << R"(<polyline fill="none" stroke="#d9534f" stroke-width="1.5" points=")";
    for (std::size_t i = 0; i < path.waypoints.size(); ++i) {
      if (i) os << ' ';
      os << X(path.waypoints[i].x) << ',' << Y(path.waypoints[i].y);
    }
    os << R"("/>)" << '\n';
  }

  const double radius = std::max(1.0, std::min(4.0, scale / 4));
  os << R"(<g fill="#222222">)" << '\n';
  for (const auto& s : path.stops) {
    os << R"(<circle cx=")" << X(s.x) << R"(" cy=")" << Y(s.y) << R"(" r=")" << radius << R"("/>)" << '\n';
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace cppg
