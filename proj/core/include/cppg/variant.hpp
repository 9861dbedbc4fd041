#pragma once

#include "cppg/grid_geometry.hpp"
#include "cppg/rational.hpp"

#include <cstdint>
#include <string_view>

namespace cppg {

enum class VariantKind {
  TrivialAllStops,  // k < 1: every lattice point is a stop
  Relaxed,          // RC: continuous stops, covers D (analysis device, opt-in only)
  Continuous,       // C: integer k, integer stops, covers D
  Discrete,         // D: half-integer k, integer stops, covers D_int at k - 1/2
};

std::string_view variant_name(VariantKind kind);  // "TRIVIAL", "RC", "C", "D"
VariantKind parse_variant(std::string_view name);

struct Variant {
  VariantKind kind;
  Rational k_raw;
  Rational k_rounded;         // floor(2 k_raw) / 2
  std::int64_t k_effective;   // k_rounded for C, k_rounded - 1/2 for D, 0 for TRIVIAL

  /// Region and radius the effective problem must cover.
  CoverageRegion region() const;
  Rational radius() const;
};

/// Rounds k_raw down to the nearest integer or half-integer and picks the
/// problem the rounded radius reduces to. Never yields Relaxed.
Variant classify(const Rational& k_raw);

/// Relaxed variant for an explicit radius; callers opt in for bound comparisons.
Variant relaxed_variant(const Rational& k);

struct Solution;

/// All (m+1)(n+1) lattice points as stops, visited row by row in alternating
/// direction. Throws unless the variant is TrivialAllStops.
Solution trivial_solution(const GridSpec& grid, const Variant& variant);

}  // namespace cppg
