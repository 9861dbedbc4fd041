#include "cppg/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cppg {
namespace {

constexpr double kGoldenTol = 1e-9;
constexpr int kGoldenIters = 200;

template <class F>
double golden_section(F&& f, double lo, double hi) {
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < kGoldenIters && (b - a) > kGoldenTol * std::max(1.0, std::abs(a) + std::abs(b)); ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2;
}

void require_increasing(const Objective& obj, double L, double T) {
  if (obj.is_linear()) return;
  const double base = obj(L, T);
  const double dl = std::max(1.0, std::abs(L) * 1e-3);
  const double dt = std::max(1.0, std::abs(T) * 1e-3);
  const double tol = 1e-12 * std::max(1.0, std::abs(base));
  if (!std::isfinite(base) || obj(L + dl, T) < base - tol || obj(L, T + dt) < base - tol) {
    throw std::invalid_argument("objective must be increasing");
  }
}

double spacing(double L, double T) { return T > 1 ? L / (T - 1) : 0.0; }

CurveOptimum relaxed_optimum(const TradeoffCurve& curve, const Objective& obj) {
  const RelaxedBoundary b{curve.relaxed_k, curve.rhs};
  const double lo = kRelaxedMinSpacing;
  const double hi = 2 * curve.relaxed_k;
  auto value = [&](double d) { return obj(b.L(d), b.T(d)); };
  constexpr int kScan = 256;
  double best_d = lo;
  double best = value(lo);
  int best_i = 0;
  for (int i = 1; i <= kScan; ++i) {
    const double d = lo + (hi - lo) * i / kScan;
    require_increasing(obj, b.L(d), b.T(d));
    const double v = value(d);
    if (v < best) {
      best = v;
      best_d = d;
      best_i = i;
    }
  }
  const double a = lo + (hi - lo) * std::max(0, best_i - 1) / kScan;
  const double c = lo + (hi - lo) * std::min(kScan, best_i + 1) / kScan;
  const double g = golden_section(value, a, c);
  if (value(g) < best) {
    best = value(g);
    best_d = g;
  }
  return {b.L(best_d), b.T(best_d), std::min(best_d, hi), best};
}

}  // namespace

Objective Objective::linear(double alpha, double beta) {
  if (!(alpha >= 0) || !(beta >= 0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw std::invalid_argument("objective weights must be nonnegative");
  }
  if (alpha == 0 && beta == 0) throw std::invalid_argument("objective weights must not both be zero");
  return {ObjectiveKind::Linear, alpha, beta, {}};
}

Objective Objective::convex(std::function<double(double, double)> fn) {
  if (!fn) throw std::invalid_argument("convex objective needs a callback");
  return {ObjectiveKind::Convex, 0.0, 0.0, std::move(fn)};
}

double Objective::operator()(double L, double T) const {
  if (kind == ObjectiveKind::Convex) return fn(L, T);
  return alpha * L + beta * T;
}

std::string Objective::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ObjectiveKind::Linear: os << "LINEAR(" << alpha << ", " << beta << ")"; break;
    case ObjectiveKind::MinLength: os << "MIN_LENGTH"; break;
    case ObjectiveKind::MinStops: os << "MIN_STOPS"; break;
    case ObjectiveKind::Convex: os << "CONVEX"; break;
  }
  return os.str();
}

CurveOptimum minimize_on_curve(const TradeoffCurve& curve, const Objective& obj) {
  if (curve.vertices.empty()) throw std::invalid_argument("empty curve");
  if (curve.single_stop_feasible) return {0.0, 1.0, 0.0, obj(0.0, 1.0)};
  if (curve.parametric) return relaxed_optimum(curve, obj);

  const auto& vs = curve.vertices;
  std::size_t best_i = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    require_increasing(obj, vs[i].L, vs[i].T);
    const double v = obj(vs[i].L, vs[i].T);
    // Strict improvement only: ties stay with the smaller d.
    if (i == 0 || v < best - 1e-12 * std::max(1.0, std::abs(best))) {
      best = v;
      best_i = i;
    }
  }
  CurveOptimum out{vs[best_i].L, vs[best_i].T, vs[best_i].d, best};
  if (!obj.is_linear()) {
    for (std::size_t i = 1; i < vs.size(); ++i) {
      const auto& a = vs[i - 1];
      const auto& b = vs[i];
      auto at = [&](double t) { return obj(a.L + t * (b.L - a.L), a.T + t * (b.T - a.T)); };
      const double t = golden_section(at, 0.0, 1.0);
      const double v = at(t);
      if (v < out.value) {
        const double L = a.L + t * (b.L - a.L);
        const double T = a.T + t * (b.T - a.T);
        out = {L, T, spacing(L, T), v};
      }
    }
  }
  if (curve.variant == VariantKind::Continuous) out.d = std::min(out.d, 2.0 * static_cast<double>(curve.k));
  return out;
}

Construction select_construction(VariantKind variant, double d_star, const Rational& k) {
  switch (variant) {
    case VariantKind::Relaxed: {
      const double hi = to_double(2 * k);
      const double d = std::clamp(d_star, kRelaxedMinSpacing, hi);
      Rational q = approximate(d, 16);
      if (q <= 0) q = Rational(1, 16);
      if (q > 2 * k) q = 2 * k;
      return {ConstructionKind::UpDown, q};
    }
    case VariantKind::Continuous: {
      const std::int64_t kk = cppg::floor(k);
      if (d_star < 2) return {ConstructionKind::UpDown, Rational(2)};
      if (d_star >= static_cast<double>(2 * kk) - 1e-9) return {ConstructionKind::UpDown, Rational(2 * kk)};
      const double r = std::round(d_star);
      if (std::abs(d_star - r) <= 1e-9 && static_cast<std::int64_t>(r) % 2 == 0) {
        return {ConstructionKind::UpDown, Rational(static_cast<std::int64_t>(r))};
      }
      const std::int64_t l = 2 * static_cast<std::int64_t>(std::floor(d_star / 2 + 1e-12));
      const double gamma = (static_cast<double>(l + 2) - d_star) / 2;
      return {ConstructionKind::Mixed, Rational(l), l + 2, gamma};
    }
    case VariantKind::Discrete: {
      const std::int64_t kk = cppg::floor(k);
      if (d_star >= static_cast<double>(2 * kk + 1) - 1e-9) return {ConstructionKind::Zigzag, Rational(2 * kk + 1)};
      if (d_star <= 1 + 1e-9) return {ConstructionKind::Discrete, Rational(1)};
      const auto xs = upper_abscissae(VariantKind::Discrete, kk);
      for (std::size_t i = 1; i < xs.size(); ++i) {
        if (std::abs(d_star - xs[i]) <= 1e-9) {
          return {ConstructionKind::Discrete, Rational(static_cast<std::int64_t>(xs[i]))};
        }
        if (d_star < xs[i]) {
          const double d1 = xs[i - 1], d2 = xs[i];
          const double f1 = new_points_upper_d(d1, kk), f2 = new_points_upper_d(d2, kk);
          // Share of the left strip that keeps the mixture on the ray of slope d*.
          const double w2 = (d2 - d_star) / f2;
          const double w1 = (d_star - d1) / f1;
          const double gamma = w2 / (w1 + w2);
          return {ConstructionKind::MixedDiscrete, Rational(static_cast<std::int64_t>(d1)),
                  static_cast<std::int64_t>(d2), gamma};
        }
      }
      return {ConstructionKind::Zigzag, Rational(2 * kk + 1)};
    }
    default: throw std::invalid_argument("no construction plan for the trivial variant");
  }
}

CoveringPath build(const Construction& c, const GridSpec& grid, const Rational& k) {
  const std::int64_t kk = cppg::floor(k);
  switch (c.kind) {
    case ConstructionKind::UpDown: return build_up_down(c.d, grid, k);
    case ConstructionKind::Mixed: return build_mixed_up_down(c.d.numerator(), c.gamma, grid, kk);
    case ConstructionKind::Discrete: return build_discrete_up_down(c.d.numerator(), grid, kk);
    case ConstructionKind::Zigzag: return build_zigzag(grid, kk);
    case ConstructionKind::MixedDiscrete: return build_mixed_discrete(c.d.numerator(), c.d2, c.gamma, grid, kk);
    case ConstructionKind::SingleStop: {
      CoveringPath p;
      p.construction = c;
      const Point s = lattice_point(grid.n() / 2, grid.m() / 2);
      p.waypoints = {s};
      p.stops = {s};
      return p;
    }
    case ConstructionKind::Trivial: break;
  }
  throw std::invalid_argument("use trivial_solution for the trivial construction");
}

bool single_stop_covers(const GridSpec& grid, const Variant& variant) {
  if (variant.kind == VariantKind::TrivialAllStops) return false;
  const std::int64_t far = (grid.n() + 1) / 2 + (grid.m() + 1) / 2;
  return Rational(far) <= variant.radius();
}

std::optional<double> Guarantee::bound() const {
  if (status != GuaranteeStatus::Proven) return std::nullopt;
  return base + epsilon.value_or(0.0) + slack;
}

std::string Guarantee::describe() const {
  std::ostringstream os;
  switch (status) {
    case GuaranteeStatus::Proven:
      os << base;
      if (epsilon) os << " + eps(" << *epsilon << ")";
      if (slack > 0) os << " + slack(" << slack << ")";
      break;
    case GuaranteeStatus::Unguaranteed: os << "unguaranteed (small grid)"; break;
    case GuaranteeStatus::NotApplicable: os << "n/a"; break;
  }
  return os.str();
}

namespace {

double linear_base(const Variant& v, const Objective& obj) {
  const auto k = v.k_effective;
  if (obj.kind == ObjectiveKind::MinStops) return 1.0;
  if (v.kind == VariantKind::Continuous) {
    if (obj.kind == ObjectiveKind::MinLength) return 1.0 + 1.0 / (4.0 * static_cast<double>(k) - 2.0);
    if (k == 1) return 1.5;
    if (k == 2) return 7.0 / 6.0;
    return 9.0 / 8.0;
  }
  if (v.kind == VariantKind::Discrete && obj.kind == ObjectiveKind::Linear) return 1.1;
  return 1.0;
}

// Point of the constructive polyline the plan realizes (up to the O(km) slack).
CostPair upper_point(const Construction& c, const GridSpec& grid, std::int64_t k) {
  const double N = static_cast<double>(grid.area());
  auto vertex = [&](double d) {
    const double f = new_points_upper_d(d, k);
    return CostPair{d * N / f, N / f + 1};
  };
  switch (c.kind) {
    case ConstructionKind::Discrete: return vertex(to_double(c.d));
    case ConstructionKind::Zigzag: return vertex(static_cast<double>(2 * k + 1));
    case ConstructionKind::MixedDiscrete: {
      const CostPair a = vertex(to_double(c.d));
      const CostPair b = vertex(static_cast<double>(c.d2));
      return {c.gamma * a.L + (1 - c.gamma) * b.L, c.gamma * a.T + (1 - c.gamma) * b.T};
    }
    default: throw std::logic_error("not a discrete plan");
  }
}

Guarantee guarantee_for(const Solution& s, const Objective& obj, const Construction& plan, const GridSpec& grid) {
  Guarantee g;
  if (obj.kind == ObjectiveKind::Convex) {
    g.note = "no ratio bound for general convex objectives";
    return g;
  }
  const double k = s.variant.kind == VariantKind::Relaxed ? to_double(s.variant.k_raw)
                                                         : static_cast<double>(s.variant.k_effective);
  const double n = static_cast<double>(grid.n());
  g.base = linear_base(s.variant, obj);
  switch (s.variant.kind) {
    case VariantKind::Relaxed:
    case VariantKind::Continuous: {
      const double eps = s.variant.kind == VariantKind::Relaxed ? 16 * k / n : 100 * k * k / n;
      g.epsilon = eps;
      if (eps < 1) {
        g.status = GuaranteeStatus::Proven;
      } else {
        g.status = GuaranteeStatus::Unguaranteed;
        g.note = "grid below the size the ratio bound needs";
      }
      return g;
    }
    case VariantKind::Discrete: {
      const std::int64_t kk = s.variant.k_effective;
      const CostPair up = upper_point(plan, grid, kk);
      const CostPair ceiling = explicit_cost_bound(plan, grid, Rational(kk));
      g.slack = std::max(0.0, (obj(ceiling) - obj(up)) / s.lower_bound_cost);
      if (obj(up) <= g.base * s.lower_bound_cost * (1 + 1e-12)) {
        g.status = GuaranteeStatus::Proven;
        g.note = "base ratio plus the construction's explicit additive slack";
      } else {
        g.status = GuaranteeStatus::Unguaranteed;
        g.note = "grid too small for the base ratio";
      }
      return g;
    }
    default: return g;
  }
}

Solution finish(Solution s, const Objective& obj) {
  s.cost = path_cost(s.path);
  const double c = obj(s.cost);
  if (s.lower_bound_cost > 0) {
    s.observed_ratio = c / s.lower_bound_cost;
  } else {
    s.observed_ratio = c > 0 ? std::numeric_limits<double>::infinity() : 1.0;
  }
  return s;
}

}  // namespace

Solution solve(const GridSpec& grid, const Rational& k_raw, const Objective& obj, SolveOptions options) {
  const Variant variant = options.relaxed ? relaxed_variant(k_raw) : classify(k_raw);
  if (variant.kind == VariantKind::TrivialAllStops) {
    Solution s = trivial_solution(grid, variant);
    // Below radius 1 every lattice point needs its own stop and any path through
    // them has length at least (#points - 1): the walk is optimal.
    s.lower_bound_point = s.cost;
    s.lower_bound_cost = obj(s.cost);
    s.observed_ratio = 1.0;
    if (k_raw >= Rational(1, 2)) {
      s.guarantee.status = GuaranteeStatus::Proven;
      s.guarantee.base = 1.0;
      s.guarantee.note = "optimal: every lattice point must be a stop";
    } else {
      s.guarantee.note = "radius below 1/2 leaves edge midpoints uncovered";
    }
    return s;
  }

  const Rational k = variant.kind == VariantKind::Relaxed ? variant.k_raw : Rational(variant.k_effective);
  const double kd = to_double(k);
  Solution s;
  s.variant = variant;
  s.m = grid.m();
  s.n = grid.n();

  if (single_stop_covers(grid, variant)) {
    s.path = build(Construction{ConstructionKind::SingleStop}, grid, k);
    s.lower_bound_point = {0.0, 1.0};
    s.lower_bound_cost = obj(0.0, 1.0);
    s.guarantee.status = GuaranteeStatus::Proven;
    s.guarantee.base = 1.0;
    s.guarantee.note = "optimal: one stop covers the grid";
    return finish(std::move(s), obj);
  }

  const TradeoffCurve lower = lower_bound_curve(grid, variant.kind, kd);
  if (lower.single_stop_feasible) {
    // The area bound is vacuous here; one stop does not suffice, so T >= 2 and
    // L >= 1. Take the best pure construction.
    std::vector<Construction> plans;
    if (variant.kind == VariantKind::Discrete) {
      for (double d : upper_abscissae(VariantKind::Discrete, variant.k_effective)) {
        plans.push_back(select_construction(variant.kind, d, k));
      }
    } else if (variant.kind == VariantKind::Continuous) {
      for (std::int64_t d = 2; d <= 2 * variant.k_effective; d += 2) plans.push_back({ConstructionKind::UpDown, Rational(d)});
    } else {
      plans.push_back(select_construction(variant.kind, 2 * kd, k));
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& plan : plans) {
      CoveringPath p = build(plan, grid, k);
      const double v = obj(path_cost(p));
      if (v < best) {
        best = v;
        s.path = std::move(p);
      }
    }
    s.lower_bound_point = {1.0, 2.0};
    s.lower_bound_cost = obj(1.0, 2.0);
    s.guarantee.status = GuaranteeStatus::Unguaranteed;
    s.guarantee.note = "grid smaller than one coverage ball; lower curve is vacuous";
    return finish(std::move(s), obj);
  }

  const CurveOptimum opt = minimize_on_curve(lower, obj);
  s.lower_bound_point = {opt.L, opt.T};
  s.lower_bound_cost = opt.value;
  s.d_star = opt.d;
  const Construction plan = select_construction(variant.kind, opt.d, k);
  s.path = build(plan, grid, k);
  s = finish(std::move(s), obj);
  s.guarantee = guarantee_for(s, obj, plan, grid);
  return s;
}

ParetoReport pareto_report(const GridSpec& grid, const Rational& k_raw, int samples) {
  if (samples < 2) throw std::invalid_argument("samples must be at least 2");
  ParetoReport r;
  r.variant = classify(k_raw);
  const Variant& v = r.variant;
  if (v.kind == VariantKind::TrivialAllStops) {
    const Solution s = trivial_solution(grid, v);
    r.constructed.push_back({s.path.construction, s.cost});
    return r;
  }
  const std::int64_t k = v.k_effective;
  const Rational kr(k);
  r.lower = lower_bound_curve(grid, v.kind, static_cast<double>(k));
  r.upper = upper_bound_curve(grid, v.kind, k);
  if (single_stop_covers(grid, v)) {
    r.constructed.push_back({Construction{ConstructionKind::SingleStop}, {0.0, 1.0}});
    return r;
  }

  std::vector<Construction> plans;
  auto pure = [&](std::int64_t d) -> Construction {
    if (v.kind == VariantKind::Continuous) return {ConstructionKind::UpDown, Rational(d)};
    if (d == 2 * k + 1) return {ConstructionKind::Zigzag, Rational(d)};
    return {ConstructionKind::Discrete, Rational(d)};
  };
  std::vector<std::int64_t> xs;
  for (double d : upper_abscissae(v.kind, k)) xs.push_back(static_cast<std::int64_t>(d));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) {
      // gamma from near 1 (mostly type xs[i-1]) down to near 0.
      for (int j = samples - 2; j >= 1; --j) {
        const double gamma = static_cast<double>(j) / (samples - 1);
        if (v.kind == VariantKind::Continuous) {
          plans.push_back({ConstructionKind::Mixed, Rational(xs[i - 1]), xs[i], gamma});
        } else {
          plans.push_back({ConstructionKind::MixedDiscrete, Rational(xs[i - 1]), xs[i], gamma});
        }
      }
    }
    plans.push_back(pure(xs[i]));
  }
  for (const auto& plan : plans) r.constructed.push_back({plan, path_cost(build(plan, grid, kr))});
  return r;
}

}  // namespace cppg
