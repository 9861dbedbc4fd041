#pragma once

#include "cppg/grid_geometry.hpp"
#include "cppg/variant.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cppg {

// The overlap-gain family. Each member bounds the area (or number of lattice
// points) a stop adds beyond its predecessor at distance d along the path.

/// d(2k - d/2) on (0, 2k], 2k^2 beyond. Concave.
double new_area(double d, double k);
/// Linear interpolation of new_area at the integers 1..2k; 2k^2 from 2k on.
double new_area_lower_c(double d, std::int64_t k);
/// Linear interpolation of new_area at the even integers 2..2k.
double new_area_upper_c(double d, std::int64_t k);
/// Lattice-point gain: d(2k+1-d/2) (+1/2 for odd d) at integers 1..2k,
/// 2k^2+2k+1 from 2k+1 on, linear in between.
double new_points_lower_d(double d, std::int64_t k);
/// Interpolation over {1, 2, 4, ..., 2k, 2k+1} with value 2k+1 at d = 1.
double new_points_upper_d(double d, std::int64_t k);

/// Exact lattice gain at integer d >= 1 (the closed form above).
Rational new_points_lower_d_exact(std::int64_t d, std::int64_t k);

struct CostPair {
  double L = 0.0;  // path length in grid units
  double T = 1.0;  // number of stops
};

enum class CurveRole { Lower, Upper };

/// A vertex of a curve in the (L, T) plane, with the average stop spacing d it
/// corresponds to (d = L / (T - 1)).
struct CurveVertex {
  double L;
  double T;
  double d;
};

/// Piecewise-linear boundary (T - 1) g(L / (T - 1)) = rhs in the (L, T)
/// plane. Vertices run in increasing L and decreasing T; the last one starts a
/// ray of constant T towards L = +inf. The relaxed lower bound is smooth and
/// is stored as a dense sample of the exact parametric boundary.
struct TradeoffCurve {
  VariantKind variant = VariantKind::Continuous;
  CurveRole role = CurveRole::Lower;
  std::int64_t k = 1;          // effective radius (RC keeps k_raw in relaxed_k)
  double relaxed_k = 0.0;
  double rhs = 0.0;            // N - 2k^2, N - (2k^2+2k+1) or N
  std::vector<CurveVertex> vertices;
  bool parametric = false;     // RC smooth boundary
  bool single_stop_feasible = false;  // rhs <= 0: the bound admits T = 1

  double ray_T() const { return vertices.empty() ? 1.0 : vertices.back().T; }
  /// Smallest T on the boundary at length L (+inf left of the first vertex).
  double T_at(double L) const;
};

/// Relaxed boundary as a function of d in (0, 2k]:
/// L(d) = (N - 2k^2) / (2k - d/2), T(d) = (N - 2k^2) / (d (2k - d/2)) + 1.
struct RelaxedBoundary {
  double k;
  double rhs;  // N - 2k^2
  double L(double d) const { return rhs / (2 * k - d / 2); }
  double T(double d) const { return rhs / (d * (2 * k - d / 2)) + 1; }
};

/// Polyline of Y g(X / Y) = C for a concave piecewise-linear g through
/// (abscissae[i], values[i]): vertices (a_i C / b_i, C / b_i). Throws if the
/// sequence is not increasing-then-constant concave.
struct PolylineVertex {
  double X;
  double Y;
  double d;
};
std::vector<PolylineVertex> polyline_from_f(std::span<const double> abscissae, std::span<const double> values,
                                            double C);

/// Abscissae the piecewise-linear members are built on.
std::vector<double> lower_abscissae(VariantKind variant, std::int64_t k);
std::vector<double> upper_abscissae(VariantKind variant, std::int64_t k);
/// Smallest admissible spacing for the relaxed boundary; keeps RC constructions finite.
inline constexpr double kRelaxedMinSpacing = 1.0 / 16.0;

/// Ball measure the right-hand side subtracts: 2k^2 (RC, C) or 2k^2+2k+1 (D).
double ball_measure(VariantKind variant, double k);

/// Necessary condition (T - 1) g(L / (T - 1)) >= N - ball for a covering path
/// with T > 1 stops. For C and D, spacings below 1 use the concave extension
/// of g through the origin. Throws if T <= 1.
bool tradeoff_holds(const CostPair& cost, const GridSpec& grid, VariantKind variant, double k);

/// Left-hand side minus right-hand side of the constraint (>= 0 iff it holds).
double tradeoff_slack(const CostPair& cost, const GridSpec& grid, VariantKind variant, double k);

TradeoffCurve lower_bound_curve(const GridSpec& grid, VariantKind variant, double k);
/// Upper (constructive) curve for C (rhs N - 2k^2) or D (rhs N).
TradeoffCurve upper_bound_curve(const GridSpec& grid, VariantKind variant, std::int64_t k);

/// Closed-form single-objective bounds read off the lower curve.
struct ScalarBound {
  double lower = 0.0;
  std::optional<double> upper;  // C-variant minimum length is only bracketed
};
ScalarBound min_length(const GridSpec& grid, VariantKind variant, double k);
ScalarBound min_stops(const GridSpec& grid, VariantKind variant, double k);

/// Gap between the lower and upper polylines at one lower vertex, evaluated on
/// the scale-free polylines (common constant C = 1).
struct GapAtVertex {
  double d = 0.0;
  double L_ratio = 1.0;   // ratios of the constructive point used in the proof
  double T_ratio = 1.0;
};
std::vector<GapAtVertex> gap_at_lower_vertices(VariantKind variant, std::int64_t k);

/// True iff some point of the upper polyline has L <= l_ratio * L1 and
/// T <= t_ratio * T1 for every lower vertex (L1, T1) (relative tolerance tol).
bool upper_dominates_within(VariantKind variant, std::int64_t k, double l_ratio, double t_ratio, double tol);

}  // namespace cppg
