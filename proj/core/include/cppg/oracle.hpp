#pragma once

#include "cppg/grid_geometry.hpp"
#include "cppg/tradeoff.hpp"
#include "cppg/variant.hpp"

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cppg {

struct OracleLimits {
  int max_lattice_points = 25;
  int max_stops = 9;
  double time_budget_seconds = 60.0;
};

/// Raised when an instance exceeds the oracle limits. Never a partial answer.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FrontierPoint {
  std::int64_t L;
  std::int64_t T;
  std::vector<Point> stops;  // one witness, in visiting order
};

/// Exact Pareto frontier of (L, T) over lattice stop sets for the C (cover the
/// rectangle with radius k) or D (cover the lattice with radius k) problem.
/// Sorted by T.
std::vector<FrontierPoint> exact_pareto(const GridSpec& grid, VariantKind variant, std::int64_t k,
                                        const OracleLimits& limits = {});

/// Shortest Hamiltonian path (free endpoints) under l1, subset DP.
/// `order` receives one optimal visiting order when non-null.
std::int64_t shortest_hamiltonian_path(const std::vector<Point>& pts, std::vector<std::size_t>* order = nullptr);

/// |B_Z((0,0),k) ∩ B_Z((p,q),k)| by enumeration.
std::int64_t brute_ball_overlap_count(std::int64_t p, std::int64_t q, std::int64_t k);

/// Area of B((0,0),k) ∩ B((p,q),k) by convex polygon clipping.
double brute_ball_overlap_area(double p, double q, double k);

/// Maximum of dist(.) over the critical points of the region: lattice points
/// (Lattice), plus edge midpoints (Edges), plus cell centers (Rectangle).
Rational brute_coverage_max_dist(std::span<const Point> stops, const GridSpec& grid, CoverageRegion region);

}  // namespace cppg
