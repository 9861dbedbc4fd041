#include "cppg/variant.hpp"

#include "cppg/optimizer.hpp"

#include <stdexcept>
#include <string>

namespace cppg {

std::string_view variant_name(VariantKind kind) {
  switch (kind) {
    case VariantKind::TrivialAllStops: return "TRIVIAL";
    case VariantKind::Relaxed: return "RC";
    case VariantKind::Continuous: return "C";
    case VariantKind::Discrete: return "D";
  }
  return "?";
}

VariantKind parse_variant(std::string_view name) {
  if (name == "TRIVIAL") return VariantKind::TrivialAllStops;
  if (name == "RC") return VariantKind::Relaxed;
  if (name == "C") return VariantKind::Continuous;
  if (name == "D") return VariantKind::Discrete;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

CoverageRegion Variant::region() const {
  switch (kind) {
    case VariantKind::TrivialAllStops: return CoverageRegion::Edges;
    case VariantKind::Discrete: return CoverageRegion::Lattice;
    default: return CoverageRegion::Rectangle;
  }
}

Rational Variant::radius() const {
  switch (kind) {
    case VariantKind::TrivialAllStops: return k_raw;
    case VariantKind::Relaxed: return k_raw;
    default: return Rational(k_effective);
  }
}

Variant classify(const Rational& k_raw) {
  if (k_raw <= 0) throw std::invalid_argument("coverage radius must be positive");
  Variant v{VariantKind::TrivialAllStops, k_raw, Rational(cppg::floor(k_raw * 2), 2), 0};
  if (k_raw < 1) return v;
  if (is_integer(v.k_rounded)) {
    v.kind = VariantKind::Continuous;
    v.k_effective = v.k_rounded.numerator();
  } else {
    v.kind = VariantKind::Discrete;
    v.k_effective = cppg::floor(v.k_rounded);
  }
  return v;
}

Variant relaxed_variant(const Rational& k) {
  if (k <= 0) throw std::invalid_argument("coverage radius must be positive");
  return Variant{VariantKind::Relaxed, k, k, cppg::floor(k)};
}

Solution trivial_solution(const GridSpec& grid, const Variant& variant) {
  if (variant.kind != VariantKind::TrivialAllStops) {
    throw std::invalid_argument("trivial solution applies only when k < 1");
  }
  CoveringPath path;
  path.construction = Construction{ConstructionKind::Trivial};
  for (std::int64_t y = 0; y <= grid.m(); ++y) {
    for (std::int64_t i = 0; i <= grid.n(); ++i) {
      const std::int64_t x = (y % 2 == 0) ? i : grid.n() - i;
      path.waypoints.push_back(lattice_point(x, y));
    }
  }
  path.stops = path.waypoints;
  path.L = path_length(path.waypoints);

  Solution s;
  s.variant = variant;
  s.path = std::move(path);
  s.m = grid.m();
  s.n = grid.n();
  s.cost = path_cost(s.path);
  s.lower_bound_cost = 0.0;
  s.observed_ratio = 1.0;
  s.guarantee.status = GuaranteeStatus::NotApplicable;
  s.guarantee.note = "all lattice points are stops";
  return s;
}

}  // namespace cppg
