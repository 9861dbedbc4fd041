#pragma once

#include "cppg/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace cppg {

struct Point {
  Rational x{0};
  Rational y{0};

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

inline Point lattice_point(std::int64_t x, std::int64_t y) { return Point{Rational(x), Rational(y)}; }

inline bool is_lattice_point(const Point& p) { return is_integer(p.x) && is_integer(p.y); }

/// The m x n rectangle D = [0, n] x [0, m]. The taller side m runs along y;
/// traversals of the up-and-down constructions are vertical segments of length m.
class GridSpec {
 public:
  /// Throws std::invalid_argument unless m >= n > 0.
  GridSpec(std::int64_t m, std::int64_t n);

  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  /// N = m * n, the area of D.
  std::int64_t area() const { return m_ * n_; }
  std::int64_t lattice_size() const { return (m_ + 1) * (n_ + 1); }

  bool contains(const Point& p) const {
    return p.x >= 0 && p.y >= 0 && p.x <= Rational(n_) && p.y <= Rational(m_);
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  std::int64_t m_;
  std::int64_t n_;
};

struct DiamondBall {
  Point center;
  Rational radius;

  bool contains(const Point& p) const;
  /// Continuous area 2 r^2.
  Rational area() const { return 2 * radius * radius; }
  /// Number of integer points inside; requires an integer center.
  std::int64_t lattice_count() const;
};

enum class CoverageRegion { Edges, Rectangle, Lattice };

Rational l1_distance(const Point& p, const Point& q);

/// Distance from x to the nearest stop. Throws on an empty stop list.
Rational dist_to_stops(const Point& x, std::span<const Point> stops);

/// Area of B((0,0),k) ∩ B((d,0),k): 2(k - d/2)^2 for d < 2k, else 0.
double ball_overlap_area(double d, double k);

/// Number of integer points in B_Z((0,0),k) ∩ B_Z((d,0),k), closed form.
std::int64_t ball_overlap_count(std::int64_t d, std::int64_t k);

/// Exact coverage test from finitely many critical points.
///
/// Lattice: every integer point of D within `radius`.
/// Edges: every point on a grid line; max of dist() on a unit edge is attained
///   at an endpoint or, when both endpoints tie, at the midpoint.
/// Rectangle: requires integer radius and integer stops; every integer point
///   within k and every edge midpoint within k - 1/2.
///
/// Stops with non-integer coordinates (Edges/Lattice only) are handled by
/// refining the lattice by the common denominator.
bool verify_coverage(std::span<const Point> stops, const GridSpec& grid, CoverageRegion region,
                     const Rational& radius);

/// Coverage of the full rectangle for arbitrary rational stops and radius, by
/// refining the lattice until both are integral.
bool covers_rectangle(std::span<const Point> stops, const GridSpec& grid, const Rational& radius);

/// Largest refinement factor covers_rectangle/verify_coverage accept.
inline constexpr std::int64_t kMaxRefinement = 64;

}  // namespace cppg
