#include "cppg/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cppg {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Linear interpolation through (xs[i], ys[i]); constant past the last point.
double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double d) {
  if (d >= xs.back()) return ys.back();
  auto it = std::upper_bound(xs.begin(), xs.end(), d);
  if (it == xs.begin()) return ys.front();
  const std::size_t i = static_cast<std::size_t>(it - xs.begin());
  const double t = (d - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

void require_k(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
}

void require_d(double d, double lo, const char* what) {
  if (!(d >= lo)) throw std::invalid_argument(std::string(what) + " requires d >= " + std::to_string(static_cast<int>(lo)));
}

std::vector<double> values_at(const std::vector<double>& xs, VariantKind variant, CurveRole role, std::int64_t k) {
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (double a : xs) {
    if (variant == VariantKind::Discrete) {
      if (role == CurveRole::Lower) {
        ys.push_back(new_points_lower_d(a, k));
      } else {
        const double kk = static_cast<double>(k);
        if (a <= 1) ys.push_back(2 * kk + 1);
        else if (a >= 2 * kk + 1) ys.push_back(2 * kk * kk + 2 * kk + 1);
        else ys.push_back(a * (2 * kk + 1 - a / 2));
      }
    } else {
      ys.push_back(new_area(a, static_cast<double>(k)));
    }
  }
  return ys;
}

std::int64_t require_integer_k(double k) {
  const auto ki = static_cast<std::int64_t>(std::llround(k));
  if (ki < 1 || std::abs(k - static_cast<double>(ki)) > 1e-12) {
    throw std::invalid_argument("C and D curves require a positive integer k");
  }
  return ki;
}

TradeoffCurve degenerate_curve(VariantKind variant, CurveRole role, double k, double rhs) {
  TradeoffCurve c;
  c.variant = variant;
  c.role = role;
  c.k = static_cast<std::int64_t>(std::floor(k));
  c.relaxed_k = k;
  c.rhs = rhs;
  c.single_stop_feasible = true;
  c.vertices.push_back({0.0, 1.0, 0.0});
  return c;
}

TradeoffCurve from_polyline(VariantKind variant, CurveRole role, std::int64_t k, double rhs) {
  const auto xs = role == CurveRole::Lower ? lower_abscissae(variant, k) : upper_abscissae(variant, k);
  const auto ys = values_at(xs, variant, role, k);
  TradeoffCurve c;
  c.variant = variant;
  c.role = role;
  c.k = k;
  c.relaxed_k = static_cast<double>(k);
  c.rhs = rhs;
  for (const auto& v : polyline_from_f(xs, ys, rhs)) c.vertices.push_back({v.X, v.Y + 1.0, v.d});
  return c;
}

// g(d) for the constraint of `variant`, extended below the first abscissa by
// the chord through the origin (still concave, still a valid bound).
double constraint_gain(double d, VariantKind variant, double k) {
  if (d <= 0) return 0.0;
  switch (variant) {
    case VariantKind::Relaxed: return new_area(d, k);
    case VariantKind::Continuous: {
      const auto ki = require_integer_k(k);
      return d < 1 ? d * new_area_lower_c(1, ki) : new_area_lower_c(d, ki);
    }
    case VariantKind::Discrete: {
      const auto ki = require_integer_k(k);
      return d < 1 ? d * new_points_lower_d(1, ki) : new_points_lower_d(d, ki);
    }
    default: throw std::invalid_argument("trade-off constraint undefined for the trivial variant");
  }
}

}  // namespace

double new_area(double d, double k) {
  if (!(d > 0)) throw std::invalid_argument("f requires d > 0");
  if (d > 2 * k) return 2 * k * k;
  return d * (2 * k - d / 2);
}

double new_area_lower_c(double d, std::int64_t k) {
  require_k(k);
  require_d(d, 1, "f_LB_C");
  const auto xs = lower_abscissae(VariantKind::Continuous, k);
  return interpolate(xs, values_at(xs, VariantKind::Continuous, CurveRole::Lower, k), d);
}

double new_area_upper_c(double d, std::int64_t k) {
  require_k(k);
  require_d(d, 2, "f_UB_C");
  const auto xs = upper_abscissae(VariantKind::Continuous, k);
  return interpolate(xs, values_at(xs, VariantKind::Continuous, CurveRole::Upper, k), d);
}

Rational new_points_lower_d_exact(std::int64_t d, std::int64_t k) {
  require_k(k);
  if (d < 1) throw std::invalid_argument("f_LB_D requires d >= 1");
  if (d >= 2 * k + 1) return Rational(2 * k * k + 2 * k + 1);
  Rational v = Rational(d) * (Rational(2 * k + 1) - Rational(d, 2));
  if (d % 2 == 1) v += Rational(1, 2);
  return v;
}

double new_points_lower_d(double d, std::int64_t k) {
  require_k(k);
  require_d(d, 1, "f_LB_D");
  if (d >= 2 * k + 1) return static_cast<double>(2 * k * k + 2 * k + 1);
  const auto lo = static_cast<std::int64_t>(std::floor(d));
  const double t = d - static_cast<double>(lo);
  const double a = to_double(new_points_lower_d_exact(lo, k));
  if (t == 0) return a;
  return (1 - t) * a + t * to_double(new_points_lower_d_exact(lo + 1, k));
}

double new_points_upper_d(double d, std::int64_t k) {
  require_k(k);
  require_d(d, 1, "f_UB_D");
  const auto xs = upper_abscissae(VariantKind::Discrete, k);
  return interpolate(xs, values_at(xs, VariantKind::Discrete, CurveRole::Upper, k), d);
}

std::vector<double> lower_abscissae(VariantKind variant, std::int64_t k) {
  require_k(k);
  std::vector<double> xs;
  const std::int64_t last = variant == VariantKind::Discrete ? 2 * k + 1 : 2 * k;
  for (std::int64_t d = 1; d <= last; ++d) xs.push_back(static_cast<double>(d));
  return xs;
}

std::vector<double> upper_abscissae(VariantKind variant, std::int64_t k) {
  require_k(k);
  std::vector<double> xs;
  if (variant == VariantKind::Discrete) xs.push_back(1);
  for (std::int64_t d = 2; d <= 2 * k; d += 2) xs.push_back(static_cast<double>(d));
  if (variant == VariantKind::Discrete) xs.push_back(static_cast<double>(2 * k + 1));
  return xs;
}

std::vector<PolylineVertex> polyline_from_f(std::span<const double> abscissae, std::span<const double> values,
                                            double C) {
  if (abscissae.empty() || abscissae.size() != values.size()) {
    throw std::invalid_argument("abscissae and values must be non-empty and of equal length");
  }
  if (!(C > 0)) throw std::invalid_argument("polyline constant must be positive");
  constexpr double tol = 1e-12;
  double prev_slope = values[0] / abscissae[0];  // chord from the origin
  if (!(abscissae[0] > 0) || !(values[0] > 0)) throw std::invalid_argument("abscissae and values must be positive");
  std::vector<PolylineVertex> out;
  out.push_back({abscissae[0] * C / values[0], C / values[0], abscissae[0]});
  for (std::size_t i = 1; i < abscissae.size(); ++i) {
    const double dx = abscissae[i] - abscissae[i - 1];
    if (!(dx > 0)) throw std::invalid_argument("abscissae must be strictly increasing");
    const double slope = (values[i] - values[i - 1]) / dx;
    if (slope < -tol) throw std::invalid_argument("values must be non-decreasing");
    if (slope > prev_slope * (1 + tol) + tol) throw std::invalid_argument("values are not concave");
    prev_slope = slope;
    if (slope <= tol) continue;  // constant tail: the ray starts at the last increase
    out.push_back({abscissae[i] * C / values[i], C / values[i], abscissae[i]});
  }
  return out;
}

double ball_measure(VariantKind variant, double k) {
  if (variant == VariantKind::Discrete) return 2 * k * k + 2 * k + 1;
  return 2 * k * k;
}

double TradeoffCurve::T_at(double L) const {
  if (vertices.empty()) return kInf;
  if (single_stop_feasible) return 1.0;
  if (parametric) {
    const RelaxedBoundary b{relaxed_k, rhs};
    if (L <= rhs / (2 * relaxed_k)) return kInf;
    const double d = 2 * (2 * relaxed_k - rhs / L);
    if (d >= 2 * relaxed_k) return b.T(2 * relaxed_k);
    return b.T(d);
  }
  if (L < vertices.front().L * (1 - 1e-12)) return kInf;
  if (L <= vertices.front().L) return vertices.front().T;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (L <= vertices[i].L) {
      const auto& a = vertices[i - 1];
      const auto& b = vertices[i];
      return a.T + (L - a.L) / (b.L - a.L) * (b.T - a.T);
    }
  }
  return vertices.back().T;
}

double tradeoff_slack(const CostPair& cost, const GridSpec& grid, VariantKind variant, double k) {
  if (!(cost.T > 1)) throw std::invalid_argument("constraint defined for T>1");
  if (cost.L < 0) throw std::invalid_argument("path length must be nonnegative");
  const double rhs = static_cast<double>(grid.area()) - ball_measure(variant, k);
  const double lhs = (cost.T - 1) * constraint_gain(cost.L / (cost.T - 1), variant, k);
  return lhs - rhs;
}

bool tradeoff_holds(const CostPair& cost, const GridSpec& grid, VariantKind variant, double k) {
  const double slack = tradeoff_slack(cost, grid, variant, k);
  return slack >= -1e-9 * std::max(1.0, static_cast<double>(grid.area()));
}

TradeoffCurve lower_bound_curve(const GridSpec& grid, VariantKind variant, double k) {
  if (variant == VariantKind::TrivialAllStops) throw std::invalid_argument("no trade-off curve for the trivial variant");
  if (!(k > 0)) throw std::invalid_argument("k must be positive");
  const double rhs = static_cast<double>(grid.area()) - ball_measure(variant, k);
  if (rhs <= 0) return degenerate_curve(variant, CurveRole::Lower, k, rhs);
  if (variant != VariantKind::Relaxed) return from_polyline(variant, CurveRole::Lower, require_integer_k(k), rhs);

  TradeoffCurve c;
  c.variant = variant;
  c.role = CurveRole::Lower;
  c.k = static_cast<std::int64_t>(std::floor(k));
  c.relaxed_k = k;
  c.rhs = rhs;
  c.parametric = true;
  const RelaxedBoundary b{k, rhs};
  constexpr int kSamples = 256;
  for (int i = 1; i <= kSamples; ++i) {
    const double d = 2 * k * i / kSamples;
    c.vertices.push_back({b.L(d), b.T(d), d});
  }
  return c;
}

TradeoffCurve upper_bound_curve(const GridSpec& grid, VariantKind variant, std::int64_t k) {
  if (variant != VariantKind::Continuous && variant != VariantKind::Discrete) {
    throw std::invalid_argument("upper curves exist for the C and D variants only");
  }
  require_k(k);
  const double kd = static_cast<double>(k);
  const double rhs = variant == VariantKind::Discrete ? static_cast<double>(grid.area())
                                                      : static_cast<double>(grid.area()) - 2 * kd * kd;
  if (rhs <= 0) return degenerate_curve(variant, CurveRole::Upper, kd, rhs);
  return from_polyline(variant, CurveRole::Upper, k, rhs);
}

ScalarBound min_length(const GridSpec& grid, VariantKind variant, double k) {
  const double rhs = static_cast<double>(grid.area()) - ball_measure(variant, k);
  if (rhs <= 0) return {0.0, 0.0};
  switch (variant) {
    case VariantKind::Relaxed: return {rhs / (2 * k), std::nullopt};
    case VariantKind::Continuous: return {rhs / (2 * k - 0.5), rhs / (2 * k - 1)};
    case VariantKind::Discrete: return {rhs / (2 * k + 1), std::nullopt};
    default: throw std::invalid_argument("no bound for the trivial variant");
  }
}

ScalarBound min_stops(const GridSpec& grid, VariantKind variant, double k) {
  if (variant == VariantKind::TrivialAllStops) throw std::invalid_argument("no bound for the trivial variant");
  const double ball = ball_measure(variant, k);
  const double N = static_cast<double>(grid.area());
  if (N <= ball) return {1.0, 1.0};
  return {N / ball, std::nullopt};
}

std::vector<GapAtVertex> gap_at_lower_vertices(VariantKind variant, std::int64_t k) {
  const auto lx = lower_abscissae(variant, k);
  const auto ux = upper_abscissae(variant, k);
  const auto lower = polyline_from_f(lx, values_at(lx, variant, CurveRole::Lower, k), 1.0);
  const auto upper = polyline_from_f(ux, values_at(ux, variant, CurveRole::Upper, k), 1.0);
  const auto uy = values_at(ux, variant, CurveRole::Upper, k);
  std::vector<GapAtVertex> out;
  for (const auto& v : lower) {
    GapAtVertex g;
    g.d = v.d;
    if (v.d < ux.front()) {
      // No upper point on this ray; the nearest upper vertex is the first one.
      g.L_ratio = upper.front().X / v.X;
      g.T_ratio = upper.front().Y / v.Y;
    } else {
      // Same spacing d on both curves: the two points lie on one ray from the origin.
      const double gu = interpolate(ux, uy, v.d);
      g.L_ratio = g.T_ratio = (v.d / gu) / v.X;
    }
    out.push_back(g);
  }
  return out;
}

bool upper_dominates_within(VariantKind variant, std::int64_t k, double l_ratio, double t_ratio, double tol) {
  const auto lx = lower_abscissae(variant, k);
  const auto ux = upper_abscissae(variant, k);
  const auto lower = polyline_from_f(lx, values_at(lx, variant, CurveRole::Lower, k), 1.0);
  const auto upper = polyline_from_f(ux, values_at(ux, variant, CurveRole::Upper, k), 1.0);
  auto upper_Y = [&](double X) {
    if (X < upper.front().X) return kInf;
    for (std::size_t i = 1; i < upper.size(); ++i) {
      if (X <= upper[i].X) {
        const auto& a = upper[i - 1];
        const auto& b = upper[i];
        return a.Y + (X - a.X) / (b.X - a.X) * (b.Y - a.Y);
      }
    }
    return upper.back().Y;
  };
  for (const auto& v : lower) {
    // The upper polyline is non-increasing in X, so the best candidate sits at
    // the largest admissible X.
    const double X2 = l_ratio * v.X * (1 + tol);
    if (upper_Y(X2) > t_ratio * v.Y * (1 + tol)) return false;
  }
  return true;
}

}  // namespace cppg
