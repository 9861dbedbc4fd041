#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

// Boost 1.74 only offers templated rational == integer overloads, and C++20's
// reversed candidates make them call each other forever. Exact non-template
// overloads win overload resolution and are found by ADL from any namespace.
namespace boost {
#define CPPG_RATIONAL_EQ(I)                                                                                   \
  inline bool operator==(const rational<std::int64_t>& a, I b) {                                          \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);                         \
  }                                                                                                        \
  inline bool operator==(I b, const rational<std::int64_t>& a) { return a == b; }                          \
  inline bool operator!=(const rational<std::int64_t>& a, I b) { return !(a == b); }                       \
  inline bool operator!=(I b, const rational<std::int64_t>& a) { return !(a == b); }
CPPG_RATIONAL_EQ(int)
CPPG_RATIONAL_EQ(long)
CPPG_RATIONAL_EQ(long long)
#undef CPPG_RATIONAL_EQ
}  // namespace boost

namespace cppg {

using Rational = boost::rational<std::int64_t>;

// Accepts "7", "-3/2", "1.5" and ".25". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the value is an integer.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return boost::rational_cast<double>(q); }

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

std::int64_t floor(const Rational& q);
std::int64_t ceil(const Rational& q);

// Exact conversion of a binary double. Throws if the value is not finite or its
// denominator exceeds 2^40 (e.g. 0.1).
Rational from_double_exact(double v);

// Best rational approximation with denominator <= max_denominator
// (continued-fraction convergents and semiconvergents).
Rational approximate(double v, std::int64_t max_denominator);

}  // namespace cppg
