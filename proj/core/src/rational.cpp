#include "cppg/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cppg {

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
      throw std::invalid_argument("rational out of range '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_digits(text.substr(0, slash), whole);
    const std::int64_t den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    result = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    if (frac_part.size() > 15) throw std::invalid_argument("too many decimals in '" + std::string(whole) + "'");
    const std::int64_t ip = int_part.empty() ? 0 : parse_digits(int_part, whole);
    const std::int64_t fp = frac_part.empty() ? 0 : parse_digits(frac_part, whole);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    result = Rational(ip) + Rational(fp, scale);
  } else {
    result = Rational(parse_digits(text, whole));
  }
  return negative ? -result : result;
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::int64_t floor(const Rational& q) {
  const std::int64_t n = q.numerator();
  const std::int64_t d = q.denominator();
  std::int64_t f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

std::int64_t ceil(const Rational& q) { return -floor(-q); }

Rational from_double_exact(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite coordinate");
  std::int64_t den = 1;
  double scaled = v;
  while (scaled != std::floor(scaled)) {
    if (den >= (std::int64_t{1} << 40)) {
      throw std::invalid_argument("value is not a short binary fraction");
    }
    scaled *= 2.0;
    den *= 2;
  }
  if (std::fabs(scaled) > 9.0e15) throw std::invalid_argument("coordinate out of range");
  return Rational(static_cast<std::int64_t>(scaled), den);
}

Rational approximate(double v, std::int64_t max_denominator) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be positive");
  const bool negative = v < 0;
  double x = std::fabs(v);
  // Convergents h/k of the continued fraction of x.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  while (frac > 1e-15) {
    const double inv = 1.0 / frac;
    const std::int64_t a = static_cast<std::int64_t>(std::floor(inv));
    if (k > (max_denominator - k_prev) / std::max<std::int64_t>(a, 1)) {
      // Semiconvergent: largest t with k*t + k_prev <= max_denominator.
      const std::int64_t t = (max_denominator - k_prev) / k;
      const std::int64_t hs = h * t + h_prev;
      const std::int64_t ks = k * t + k_prev;
      const double err_conv = std::fabs(x - static_cast<double>(h) / static_cast<double>(k));
      const double err_semi = std::fabs(x - static_cast<double>(hs) / static_cast<double>(ks));
      if (t > 0 && err_semi < err_conv) {
        h = hs;
        k = ks;
      }
      break;
    }
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    frac = inv - std::floor(inv);
  }
  Rational r(h, k);
  return negative ? -r : r;
}

}  // namespace cppg
