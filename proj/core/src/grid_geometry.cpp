#include "cppg/grid_geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cppg {

GridSpec::GridSpec(std::int64_t m, std::int64_t n) : m_(m), n_(n) {
  if (n <= 0 || m <= 0) throw std::invalid_argument("grid dimensions must be positive");
  if (m < n) throw std::invalid_argument("grid requires m >= n (m is the taller side)");
  if (m > 1'000'000) throw std::invalid_argument("grid dimension too large");
}

bool DiamondBall::contains(const Point& p) const { return l1_distance(center, p) <= radius; }

std::int64_t DiamondBall::lattice_count() const {
  if (!is_lattice_point(center)) throw std::invalid_argument("lattice_count requires an integer center");
  const std::int64_t k = cppg::floor(radius);
  if (k < 0) return 0;
  return 2 * k * k + 2 * k + 1;
}

Rational l1_distance(const Point& p, const Point& q) { return abs(p.x - q.x) + abs(p.y - q.y); }

Rational dist_to_stops(const Point& x, std::span<const Point> stops) {
  if (stops.empty()) throw std::invalid_argument("no stops");
  Rational best = l1_distance(x, stops.front());
  for (const auto& s : stops.subspan(1)) best = std::min(best, l1_distance(x, s));
  return best;
}

double ball_overlap_area(double d, double k) {
  if (d < 0 || k <= 0) throw std::invalid_argument("ball_overlap_area requires d >= 0 and k > 0");
  if (d >= 2 * k) return 0.0;
  const double r = k - d / 2;
  return 2 * r * r;
}

std::int64_t ball_overlap_count(std::int64_t d, std::int64_t k) {
  if (d < 0 || k < 1) throw std::invalid_argument("ball_overlap_count requires d >= 0 and k >= 1");
  if (d >= 2 * k + 1) return 0;
  const std::int64_t w = 2 * k - d;
  if (d % 2 == 1) return (w + 1) * (w + 1) / 2;
  return ((w + 2) * (w + 2) + w * w) / 4;
}

namespace {

// Multi-source l1 distance transform on the refined lattice
// {0..n*scale} x {0..m*scale}. Exact for the city-block metric on a rectangle.
class DistanceField {
 public:
  DistanceField(std::span<const Point> stops, const GridSpec& grid, std::int64_t scale)
      : width_(grid.n() * scale), height_(grid.m() * scale) {
    const std::int64_t cells = (width_ + 1) * (height_ + 1);
    if (cells > 200'000'000) throw std::invalid_argument("coverage check too large");
    constexpr std::int64_t kInf = std::numeric_limits<std::int32_t>::max() / 2;
    dist_.assign(static_cast<std::size_t>(cells), static_cast<std::int32_t>(kInf));
    for (const auto& s : stops) {
      const Rational sx = s.x * scale;
      const Rational sy = s.y * scale;
      const std::int64_t x = sx.numerator();
      const std::int64_t y = sy.numerator();
      if (!is_integer(sx) || !is_integer(sy)) throw std::logic_error("stop not on refined lattice");
      at(x, y) = 0;
    }
    for (std::int64_t y = 0; y <= height_; ++y) {
      for (std::int64_t x = 0; x <= width_; ++x) {
        auto& d = at(x, y);
        if (x > 0) d = std::min(d, at(x - 1, y) + 1);
        if (y > 0) d = std::min(d, at(x, y - 1) + 1);
      }
    }
    for (std::int64_t y = height_; y >= 0; --y) {
      for (std::int64_t x = width_; x >= 0; --x) {
        auto& d = at(x, y);
        if (x < width_) d = std::min(d, at(x + 1, y) + 1);
        if (y < height_) d = std::min(d, at(x, y + 1) + 1);
      }
    }
  }

  std::int64_t width() const { return width_; }
  std::int64_t height() const { return height_; }
  std::int32_t operator()(std::int64_t x, std::int64_t y) const {
    return dist_[static_cast<std::size_t>(y * (width_ + 1) + x)];
  }

 private:
  std::int32_t& at(std::int64_t x, std::int64_t y) {
    return dist_[static_cast<std::size_t>(y * (width_ + 1) + x)];
  }

  std::int64_t width_;
  std::int64_t height_;
  std::vector<std::int32_t> dist_;
};

std::int64_t common_denominator(std::span<const Point> stops) {
  std::int64_t q = 1;
  for (const auto& s : stops) {
    q = std::lcm(q, s.x.denominator());
    q = std::lcm(q, s.y.denominator());
    if (q > kMaxRefinement) throw std::invalid_argument("stop coordinates too fine for exact coverage check");
  }
  return q;
}

void require_inside(std::span<const Point> stops, const GridSpec& grid) {
  if (stops.empty()) throw std::invalid_argument("no stops");
  for (const auto& s : stops) {
    if (!grid.contains(s)) throw std::invalid_argument("stop (" + to_string(s.x) + "," + to_string(s.y) + ") outside the rectangle");
  }
}

// dist <= r for integer dist and rational r.
bool within(std::int64_t dist, const Rational& r) { return Rational(dist) <= r; }

// Max of dist() along a unit edge whose endpoints have distances a and b
// (integer stops): the endpoints, or the midpoint a + 1/2 when a == b.
bool edge_within(std::int64_t a, std::int64_t b, const Rational& r) {
  if (a == b) return Rational(2 * a + 1, 2) <= r;
  return within(std::max(a, b), r);
}

// Rectangle coverage on the refined lattice where stops are integral and the
// refined radius K is an integer: all lattice points within K and every unit
// edge midpoint within K - 1/2, i.e. no edge with both endpoints at exactly K.
bool rectangle_on_field(const DistanceField& f, std::int64_t K) {
  for (std::int64_t y = 0; y <= f.height(); ++y) {
    for (std::int64_t x = 0; x <= f.width(); ++x) {
      const std::int64_t d = f(x, y);
      if (d > K) return false;
      if (d == K) {
        if (x < f.width() && f(x + 1, y) == K) return false;
        if (y < f.height() && f(x, y + 1) == K) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool verify_coverage(std::span<const Point> stops, const GridSpec& grid, CoverageRegion region,
                     const Rational& radius) {
  if (radius <= 0) throw std::invalid_argument("coverage radius must be positive");
  require_inside(stops, grid);

  if (region == CoverageRegion::Rectangle) {
    if (!is_integer(radius) || !std::all_of(stops.begin(), stops.end(), is_lattice_point)) {
      throw std::invalid_argument("exact check requires integer radius/stops");
    }
    const DistanceField field(stops, grid, 1);
    return rectangle_on_field(field, radius.numerator());
  }

  const std::int64_t q = common_denominator(stops);
  const DistanceField field(stops, grid, q);
  const Rational scaled_radius = radius * q;

  if (region == CoverageRegion::Lattice) {
    for (std::int64_t y = 0; y <= field.height(); y += q) {
      for (std::int64_t x = 0; x <= field.width(); x += q) {
        if (!within(field(x, y), scaled_radius)) return false;
      }
    }
    return true;
  }

  // Edges: horizontal grid lines y = j and vertical grid lines x = i, walked in
  // refined unit steps.
  for (std::int64_t y = 0; y <= field.height(); y += q) {
    for (std::int64_t x = 0; x < field.width(); ++x) {
      if (!edge_within(field(x, y), field(x + 1, y), scaled_radius)) return false;
    }
  }
  for (std::int64_t x = 0; x <= field.width(); x += q) {
    for (std::int64_t y = 0; y < field.height(); ++y) {
      if (!edge_within(field(x, y), field(x, y + 1), scaled_radius)) return false;
    }
  }
  return true;
}

bool covers_rectangle(std::span<const Point> stops, const GridSpec& grid, const Rational& radius) {
  if (radius <= 0) throw std::invalid_argument("coverage radius must be positive");
  require_inside(stops, grid);
  std::int64_t q = std::lcm(common_denominator(stops), radius.denominator());
  if (q > kMaxRefinement) throw std::invalid_argument("radius too fine for exact coverage check");
  const DistanceField field(stops, grid, q);
  return rectangle_on_field(field, (radius * q).numerator());
}

}  // namespace cppg
