#include "cppg/tradeoff.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace cppg;

namespace {

// Lattice points gained by a second stop at distance d: ball minus overlap,
// counted directly.
std::int64_t gained_points(std::int64_t d, std::int64_t k) {
  std::int64_t c = 0;
  for (std::int64_t x = -k - d; x <= k + d; ++x) {
    for (std::int64_t y = -k; y <= k; ++y) {
      const bool in_second = std::abs(x - d) + std::abs(y) <= k;
      const bool in_first = std::abs(x) + std::abs(y) <= k;
      c += in_second && !in_first;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("overlap-gain function") {
  CHECK(new_area(4, 2) == doctest::Approx(8));
  CHECK(new_area(2, 2) == doctest::Approx(6));
  CHECK(new_area(5, 1) == doctest::Approx(2));
  CHECK_THROWS(new_area(0, 1));
}

TEST_CASE("piecewise-linear members") {
  CHECK(new_area_lower_c(1, 2) == doctest::Approx(3.5));
  CHECK(new_area_lower_c(1.5, 2) == doctest::Approx(4.75));
  CHECK(new_area_lower_c(7, 2) == doctest::Approx(8));
  CHECK(new_area_upper_c(2, 2) == doctest::Approx(6));
  CHECK(new_area_upper_c(3, 2) == doctest::Approx(7));
  CHECK(new_area_upper_c(10, 3) == doctest::Approx(18));
  CHECK(new_points_lower_d(1, 1) == doctest::Approx(3));
  CHECK(new_points_lower_d(2, 1) == doctest::Approx(4));
  CHECK(new_points_lower_d(3, 1) == doctest::Approx(5));
  CHECK(new_points_upper_d(1, 2) == doctest::Approx(5));
  CHECK(new_points_upper_d(4, 2) == doctest::Approx(12));
  CHECK(new_points_upper_d(5, 2) == doctest::Approx(13));
}

TEST_CASE("exact lattice gain matches counting") {
  for (std::int64_t k = 1; k <= 8; ++k) {
    for (std::int64_t d = 1; d <= 2 * k + 3; ++d) {
      CHECK(new_points_lower_d_exact(d, k) == Rational(gained_points(d, k)));
      CHECK(new_points_lower_d(static_cast<double>(d), k) == doctest::Approx(static_cast<double>(gained_points(d, k))));
    }
  }
}

TEST_CASE("members are concave") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    const double kd = static_cast<double>(k);
    const double h = 0.125;
    auto second_diff = [&](auto f, double lo, double hi) {
      double worst = -1e300;
      for (double d = lo + h; d + h <= hi; d += h) worst = std::max(worst, f(d + h) - 2 * f(d) + f(d - h));
      return worst;
    };
    CHECK(second_diff([&](double d) { return new_area(d, kd); }, 0.125, 2 * kd + 3) <= 1e-9);
    CHECK(second_diff([&](double d) { return new_area_lower_c(d, k); }, 1, 2 * kd + 3) <= 1e-9);
    CHECK(second_diff([&](double d) { return new_area_upper_c(d, k); }, 2, 2 * kd + 3) <= 1e-9);
    CHECK(second_diff([&](double d) { return new_points_lower_d(d, k); }, 1, 2 * kd + 4) <= 1e-9);
    CHECK(second_diff([&](double d) { return new_points_upper_d(d, k); }, 1, 2 * kd + 4) <= 1e-9);
  }
}

TEST_CASE("members are ordered") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    const double kd = static_cast<double>(k);
    for (double d = 1; d <= 2 * kd + 3; d += 0.125) {
      CHECK(new_area_lower_c(d, k) <= new_area(d, kd) + 1e-9);
      CHECK(new_points_upper_d(d, k) <= new_points_lower_d(d, k) + 1e-9);
      if (d >= 2) CHECK(new_area_upper_c(d, k) <= new_area_lower_c(d, k) + 1e-9);
    }
    for (std::int64_t d = 1; d <= 2 * k; ++d) {
      CHECK(new_area_lower_c(static_cast<double>(d), k) == doctest::Approx(new_area(static_cast<double>(d), kd)));
    }
    for (double d : upper_abscissae(VariantKind::Discrete, k)) {
      if (d > 1) CHECK(new_points_lower_d(d, k) == doctest::Approx(new_points_upper_d(d, k)));
    }
  }
}

TEST_CASE("trade-off constraint examples") {
  const GridSpec ten(10, 10);
  CHECK_FALSE(tradeoff_holds({49, 2}, ten, VariantKind::Relaxed, 1));
  CHECK(tradeoff_holds({2, 3}, GridSpec(2, 2), VariantKind::Discrete, 1));
  CHECK(tradeoff_holds({0.5, 1.5}, GridSpec(1, 1), VariantKind::Relaxed, 1));
  CHECK(tradeoff_holds({0, 2}, GridSpec(2, 1), VariantKind::Relaxed, 2));
  CHECK_THROWS(tradeoff_holds({10, 1}, ten, VariantKind::Continuous, 1));
  // Relaxed k=1 on 10x10: T - 1 >= 98 / f(d) with d = L / (T - 1).
  CHECK(tradeoff_slack({98, 50}, ten, VariantKind::Relaxed, 1) == doctest::Approx(0).epsilon(1e-9));
}

TEST_CASE("polyline from a concave piecewise-linear function") {
  const std::vector<double> a{3}, v{5};
  const auto one = polyline_from_f(a, v, 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].X == doctest::Approx(3));
  CHECK(one[0].Y == doctest::Approx(1));

  const std::vector<double> xs{1, 2}, fs{1.5, 2};
  const auto two = polyline_from_f(xs, fs, 98);
  REQUIRE(two.size() == 2);
  CHECK(two[0].X == doctest::Approx(98 / 1.5));
  CHECK(two[0].Y == doctest::Approx(98 / 1.5));
  CHECK(two[1].X == doctest::Approx(98));
  CHECK(two[1].Y == doctest::Approx(49));

  const std::vector<double> bad_x{1, 2, 3}, bad_f{1, 1.2, 2};
  CHECK_THROWS(polyline_from_f(bad_x, bad_f, 1));
}

TEST_CASE("lower curves") {
  const GridSpec ten(10, 10);
  const TradeoffCurve c = lower_bound_curve(ten, VariantKind::Continuous, 1);
  CHECK(c.rhs == doctest::Approx(98));
  REQUIRE(c.vertices.size() == 2);
  CHECK(c.vertices[0].L == doctest::Approx(98 / 1.5));
  CHECK(c.vertices[0].T == doctest::Approx(98 / 1.5 + 1));
  CHECK(c.ray_T() == doctest::Approx(50));
  CHECK(c.T_at(1000) == doctest::Approx(50));
  CHECK(std::isinf(c.T_at(10)));

  const TradeoffCurve d = lower_bound_curve(ten, VariantKind::Discrete, 1);
  CHECK(d.rhs == doctest::Approx(95));
  CHECK(d.ray_T() == doctest::Approx(20));
  CHECK(d.vertices.front().L == doctest::Approx(95.0 / 3));

  const TradeoffCurve r = lower_bound_curve(ten, VariantKind::Relaxed, 1);
  CHECK(r.parametric);
  CHECK(r.vertices.size() == 256);
  CHECK(r.ray_T() == doctest::Approx(50));
  const RelaxedBoundary rb{1, 98};
  CHECK(rb.L(2) == doctest::Approx(98));
  for (const auto& v : r.vertices) CHECK(tradeoff_slack({v.L, v.T}, ten, VariantKind::Relaxed, 1) == doctest::Approx(0).epsilon(1e-6));
}

TEST_CASE("upper curves sit above lower curves") {
  for (std::int64_t k = 1; k <= 6; ++k) {
    const GridSpec g(60, 40);
    for (auto kind : {VariantKind::Continuous, VariantKind::Discrete}) {
      const TradeoffCurve lo = lower_bound_curve(g, kind, static_cast<double>(k));
      const TradeoffCurve up = upper_bound_curve(g, kind, k);
      CHECK(up.role == CurveRole::Upper);
      for (const auto& v : up.vertices) CHECK(tradeoff_holds({v.L, v.T}, g, kind, static_cast<double>(k)));
      CHECK(up.ray_T() >= lo.ray_T());
    }
  }
  CHECK(upper_bound_curve(GridSpec(10, 10), VariantKind::Discrete, 1).rhs == doctest::Approx(100));
  CHECK_THROWS(upper_bound_curve(GridSpec(10, 10), VariantKind::Relaxed, 1));
}

TEST_CASE("single-objective bounds") {
  const GridSpec ten(10, 10);
  CHECK(min_length(ten, VariantKind::Relaxed, 1).lower == doctest::Approx(49));
  CHECK(min_stops(ten, VariantKind::Discrete, 1).lower == doctest::Approx(20));
  CHECK(min_length(ten, VariantKind::Discrete, 1).lower == doctest::Approx(95.0 / 3));
  const ScalarBound c = min_length(ten, VariantKind::Continuous, 2);
  CHECK(c.lower == doctest::Approx(92 / 3.5));
  REQUIRE(c.upper);
  CHECK(*c.upper == doctest::Approx(92 / 3.0));
  CHECK(min_stops(ten, VariantKind::Continuous, 2).lower == doctest::Approx(12.5));
}

TEST_CASE("discrete gap at odd vertices") {
  for (std::int64_t k = 2; k <= 25; ++k) {
    for (const auto& g : gap_at_lower_vertices(VariantKind::Discrete, k)) {
      const auto d = static_cast<std::int64_t>(std::llround(g.d));
      if (d % 2 == 0 || d == 1 || d == 2 * k + 1) continue;
      const double expect = 1 + 1 / (new_points_lower_d(g.d, k) - 1);
      CHECK(g.L_ratio == doctest::Approx(expect).epsilon(1e-9));
      CHECK(g.T_ratio == doctest::Approx(expect).epsilon(1e-9));
    }
  }
}

TEST_CASE("gap ratios") {
  for (std::int64_t k = 1; k <= 25; ++k) {
    const double lr = k == 1 ? 1.5 : k == 2 ? 7.0 / 6.0 : 1.1;
    const double tr = k <= 2 ? 1.0 : 9.0 / 8.0;
    CHECK(upper_dominates_within(VariantKind::Continuous, k, lr, tr, 1e-9));
    CHECK(upper_dominates_within(VariantKind::Discrete, k, 1.1, 1.1, 1e-9));
  }
  CHECK_FALSE(upper_dominates_within(VariantKind::Continuous, 3, 1.0, 1.0, 1e-9));
}

TEST_CASE("feasible region is convex") {
  std::mt19937_64 rng(5);
  int n = 0;
  while (n < 300) {
    const GridSpec g(30, 20);
    const VariantKind kind = n % 2 ? VariantKind::Continuous : VariantKind::Discrete;
    std::uniform_real_distribution<double> L(0, 1000), T(1.5, 600);
    const CostPair a{L(rng), T(rng)}, b{L(rng), T(rng)};
    if (!tradeoff_holds(a, g, kind, 2) || !tradeoff_holds(b, g, kind, 2)) continue;
    const double lam = std::uniform_real_distribution<double>(0, 1)(rng);
    CHECK(tradeoff_holds({lam * a.L + (1 - lam) * b.L, lam * a.T + (1 - lam) * b.T}, g, kind, 2));
    ++n;
  }
}
