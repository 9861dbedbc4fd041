#pragma once

#include "cppg/grid_geometry.hpp"
#include "cppg/path.hpp"
#include "cppg/tradeoff.hpp"
#include "cppg/variant.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cppg {

enum class ObjectiveKind { Linear, MinLength, MinStops, Convex };

struct Objective {
  ObjectiveKind kind = ObjectiveKind::Linear;
  double alpha = 1.0;
  double beta = 1.0;
  std::function<double(double, double)> fn;  // Convex only

  static Objective linear(double alpha, double beta);
  static Objective min_length() { return {ObjectiveKind::MinLength, 1.0, 0.0, {}}; }
  static Objective min_stops() { return {ObjectiveKind::MinStops, 0.0, 1.0, {}}; }
  /// `fn` must be increasing in both arguments and convex.
  static Objective convex(std::function<double(double, double)> fn);

  bool is_linear() const { return kind != ObjectiveKind::Convex; }
  double operator()(double L, double T) const;
  double operator()(const CostPair& c) const { return (*this)(c.L, c.T); }
  std::string describe() const;
};

struct CurveOptimum {
  double L = 0.0;
  double T = 1.0;
  double d = 0.0;  // L / (T - 1), capped as described in minimize_on_curve
  double value = 0.0;
};

/// Minimum of the objective over the boundary of the feasible region.
/// Linear: vertex scan (ties toward smaller d). Convex: golden-section search on
/// every segment, or over d for the parametric relaxed boundary. The relaxed
/// boundary is restricted to d >= kRelaxedMinSpacing.
CurveOptimum minimize_on_curve(const TradeoffCurve& curve, const Objective& objective);

/// Maps d* to the construction used for it.
Construction select_construction(VariantKind variant, double d_star, const Rational& k);

enum class GuaranteeStatus { Proven, Unguaranteed, NotApplicable };

struct Guarantee {
  GuaranteeStatus status = GuaranteeStatus::NotApplicable;
  double base = 1.0;                 // approximation ratio without size terms
  std::optional<double> epsilon;     // size term; >= 1 means no guarantee
  double slack = 0.0;                // explicit additive slack (D variant)
  std::string note;

  /// base + epsilon + slack, when meaningful.
  std::optional<double> bound() const;
  std::string describe() const;
};

struct Solution {
  Variant variant;
  CoveringPath path;
  std::int64_t m = 0;
  std::int64_t n = 0;
  CostPair cost;
  CostPair lower_bound_point;      // (L*, T*) on the lower curve
  double lower_bound_cost = 0.0;   // objective at (L*, T*)
  double observed_ratio = 1.0;
  Guarantee guarantee;
  double d_star = 0.0;
};

struct SolveOptions {
  bool relaxed = false;  // use the relaxed variant with radius k_raw (analysis only)
};

Solution solve(const GridSpec& grid, const Rational& k_raw, const Objective& objective, SolveOptions options = {});

/// Builds the path for a construction plan.
CoveringPath build(const Construction& c, const GridSpec& grid, const Rational& k);

/// True iff one lattice stop covers the whole coverage region.
bool single_stop_covers(const GridSpec& grid, const Variant& variant);

struct ConstructedPoint {
  Construction construction;
  CostPair cost;
};

struct ParetoReport {
  Variant variant;
  std::optional<TradeoffCurve> lower;
  std::optional<TradeoffCurve> upper;
  std::vector<ConstructedPoint> constructed;
};

/// Lower and upper curves plus constructed costs: every pure construction,
/// and for samples > 2 the interior gamma = j / (samples - 1) of each adjacent
/// pair. Ordered by construction parameter.
ParetoReport pareto_report(const GridSpec& grid, const Rational& k_raw, int samples);

}  // namespace cppg
