#pragma once

#include "cppg/grid_geometry.hpp"
#include "cppg/tradeoff.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cppg {

enum class ConstructionKind { UpDown, Mixed, Discrete, Zigzag, MixedDiscrete, SingleStop, Trivial };

/// Construction tag with its parameters.
///  UpDown(d)                 type-d up-and-down path (any rational d in (0, 2k])
///  Mixed(d, gamma)           type-d on the left gamma share, type-(d+2) on the rest
///  Discrete(d)               d = 1 or even, lattice coverage
///  Zigzag                    tessellation path (discrete type 2k+1)
///  MixedDiscrete(d, d2, gamma)
///  SingleStop                one stop covers everything
struct Construction {
  ConstructionKind kind = ConstructionKind::Trivial;
  Rational d{0};
  std::int64_t d2 = 0;
  double gamma = 0.0;

  std::string tag() const;  // "UAD", "MIXED", ...
  std::string describe() const;  // "MIXED(d=2, gamma=0.5)"
  friend bool operator==(const Construction&, const Construction&) = default;
};

struct CoveringPath {
  std::vector<Point> waypoints;  // traveled polyline, axis-parallel segments
  std::vector<Point> stops;      // in visiting order, pairwise distinct
  Rational L{0};
  Construction construction;

  std::int64_t T() const { return static_cast<std::int64_t>(stops.size()); }
};

Rational path_length(const std::vector<Point>& waypoints);

/// (L, T) recomputed from the waypoints and stop list.
CostPair path_cost(const CoveringPath& path);

/// True iff every stop lies on the waypoint polyline, stops are distinct and L
/// matches the polyline.
bool path_consistent(const CoveringPath& path);

/// Vertical traversals at x = j r (r = 2k - d/2) plus one clamped to x = n;
/// even traversals go up with stops at y = i d, odd ones go down with stops at
/// y = i d + d/2, and every traversal stops at its top end.
CoveringPath build_up_down(const Rational& d, const GridSpec& grid, const Rational& k);

/// Column split s = ceil(gamma n): type-d on [0, s], type-(d+2) on [s, n].
/// d even, 2 <= d <= 2k - 2, gamma in [0, 1).
CoveringPath build_mixed_up_down(std::int64_t d, double gamma, const GridSpec& grid, std::int64_t k);

/// d = 1: separation 2k+1, every lattice point of a traversal is a stop.
/// d = 2t (t = 1..k): separation 2k+1-t, stop spacing 2t, odd traversals offset by t.
CoveringPath build_discrete_up_down(std::int64_t d, const GridSpec& grid, std::int64_t k);

/// Path through the tessellation lattice members near the rectangle, projected
/// onto it.
CoveringPath build_zigzag(const GridSpec& grid, std::int64_t k);

/// (d1, d2) adjacent in {1, 2, 4, ..., 2k, 2k+1}; type-d1 on [0, s], type-d2 on [s, n].
CoveringPath build_mixed_discrete(std::int64_t d1, std::int64_t d2, double gamma, const GridSpec& grid,
                                  std::int64_t k);

/// Split column for a strip share gamma.
std::int64_t split_column(double gamma, std::int64_t n);

/// Lattice {(a, b) : (k a + (k+1) b) mod (2k^2+2k+1) = 0}.
struct TessellationLattice {
  std::int64_t k;
  std::int64_t modulus() const { return 2 * k * k + 2 * k + 1; }
  bool contains(std::int64_t a, std::int64_t b) const;
  /// Traversal index (k a + (k+1) b) / modulus of a member.
  std::int64_t traversal(std::int64_t a, std::int64_t b) const;
};

/// Additive length constant of the zigzag bound: L <= (2k+1) T_bound + c m.
inline constexpr double kZigzagLengthSlack = 1.0;

/// Explicit cost ceiling a construction never exceeds on `grid`. Throws for
/// Trivial.
CostPair explicit_cost_bound(const Construction& c, const GridSpec& grid, const Rational& k);

}  // namespace cppg
