#include "cppg/path.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cppg {
namespace {

// Path pieces are assembled in absolute coordinates.
struct Piece {
  std::vector<Point> waypoints;
  std::vector<Point> stops;
};

void push_waypoint(std::vector<Point>& w, const Point& p) {
  if (w.empty() || !(w.back() == p)) w.push_back(p);
}

// Horizontal-then-vertical grid route from the last waypoint to p.
void route_hv(std::vector<Point>& w, const Point& p) {
  if (w.empty()) {
    w.push_back(p);
    return;
  }
  push_waypoint(w, Point{p.x, w.back().y});
  push_waypoint(w, p);
}

// Vertical-then-horizontal.
void route_vh(std::vector<Point>& w, const Point& p) {
  if (w.empty()) {
    w.push_back(p);
    return;
  }
  push_waypoint(w, Point{w.back().x, p.y});
  push_waypoint(w, p);
}

// Staggered up-and-down pattern on the strip [x0, x0 + width] x [0, m].
// `offset` shifts the stops of odd traversals; `spacing` is the stop spacing.
Piece up_down_strip(const Rational& x0, const Rational& width, std::int64_t m, const Rational& sep,
                    const Rational& spacing, const Rational& offset) {
  std::vector<Rational> xs;
  const std::int64_t count = cppg::ceil(width / sep);  // traversals at j * sep, j < count
  for (std::int64_t j = 0; j < count; ++j) xs.push_back(x0 + sep * j);
  if (xs.empty() || xs.back() != x0 + width) xs.push_back(x0 + width);

  const Rational top(m);
  Piece p;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const Rational x = xs[j];
    std::vector<Rational> ys;
    for (Rational y = (j % 2 == 0) ? Rational(0) : offset; y <= top; y += spacing) ys.push_back(y);
    if (ys.empty() || ys.back() != top) ys.push_back(top);
    if (j % 2 == 1) std::reverse(ys.begin(), ys.end());
    const Point start{x, j % 2 == 0 ? Rational(0) : top};
    const Point end{x, j % 2 == 0 ? top : Rational(0)};
    route_hv(p.waypoints, start);
    push_waypoint(p.waypoints, end);
    for (const auto& y : ys) p.stops.push_back(Point{x, y});
  }
  return p;
}

Piece discrete_strip(std::int64_t d, std::int64_t x0, std::int64_t width, std::int64_t m, std::int64_t k) {
  if (d == 1) return up_down_strip(Rational(x0), Rational(width), m, Rational(2 * k + 1), Rational(1), Rational(0));
  const std::int64_t t = d / 2;
  return up_down_strip(Rational(x0), Rational(width), m, Rational(2 * k + 1 - t), Rational(d), Rational(t));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t b) {
  const std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, new_t = 1, r = m, new_r = mod(a, m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw std::logic_error("no modular inverse");
  return mod(t, m);
}

Piece zigzag_strip(std::int64_t x0, std::int64_t x1, std::int64_t m, std::int64_t k) {
  const TessellationLattice lat{k};
  const std::int64_t M = lat.modulus();
  const std::int64_t kinv = mod_inverse(k, M);
  // traversal index -> members (a, b)
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>> lines;
  for (std::int64_t b = -k; b <= m + k; ++b) {
    const std::int64_t dy = b < 0 ? -b : (b > m ? b - m : 0);
    const std::int64_t slack = k - dy;  // horizontal reach left for this row
    const std::int64_t lo = x0 - slack;
    const std::int64_t hi = x1 + slack;
    // k a + (k+1) b = 0 (mod M)  <=>  a = -(k+1) b k^{-1} (mod M)
    const std::int64_t residue = mod(-(k + 1) * mod(b, M) % M * kinv, M);
    for (std::int64_t a = lo + mod(residue - lo, M); a <= hi; a += M) {
      lines[lat.traversal(a, b)].emplace_back(a, b);
    }
  }
  Piece p;
  std::set<Point> seen;
  std::size_t rank = 0;
  for (auto& [idx, members] : lines) {
    std::sort(members.begin(), members.end());
    if (rank++ % 2 == 1) std::reverse(members.begin(), members.end());
    for (const auto& [a, b] : members) {
      const Point s = lattice_point(std::clamp(a, x0, x1), std::clamp(b, std::int64_t{0}, m));
      if (!seen.insert(s).second) continue;
      route_hv(p.waypoints, s);
      p.stops.push_back(s);
    }
  }
  return p;
}

// Strips are symmetric under y -> m - y, so a flipped piece covers the same set.
Piece flipped(Piece piece, std::int64_t m) {
  for (std::vector<Point>* pts : {&piece.waypoints, &piece.stops}) {
    for (auto& q : *pts) q.y = Rational(m) - q.y;
  }
  return piece;
}

// Left piece, then a vertical-then-horizontal connector, then the right piece,
// flipped when that starts it nearer to where the left one ended. When both
// pieces run the shared column the same way it is walked once, collecting the
// stops of both.
CoveringPath join(Piece left, Piece right, const Construction& c, std::int64_t m) {
  const std::size_t lw = left.waypoints.size();
  auto shares_column = [&](const Piece& r) {
    return lw >= 2 && r.waypoints.size() >= 2 && left.waypoints[lw - 2] == r.waypoints[0] &&
           left.waypoints[lw - 1] == r.waypoints[1] && left.waypoints[lw - 1].x == left.waypoints[lw - 2].x;
  };
  if (!left.waypoints.empty() && !right.waypoints.empty() && !shares_column(right)) {
    Piece other = flipped(right, m);
    const Point& end = left.waypoints.back();
    if (shares_column(other) || l1_distance(end, other.waypoints.front()) < l1_distance(end, right.waypoints.front())) {
      right = std::move(other);
    }
  }
  if (shares_column(right)) {
    const Rational x = left.waypoints[lw - 1].x;
    const bool up = left.waypoints[lw - 1].y > left.waypoints[lw - 2].y;
    std::vector<Point> column;
    while (!left.stops.empty() && left.stops.back().x == x) {
      column.push_back(left.stops.back());
      left.stops.pop_back();
    }
    std::size_t skip = 0;
    while (skip < right.stops.size() && right.stops[skip].x == x) column.push_back(right.stops[skip++]);
    std::sort(column.begin(), column.end(), [up](const Point& a, const Point& b) { return up ? a.y < b.y : a.y > b.y; });
    left.stops.insert(left.stops.end(), column.begin(), column.end());
    right.stops.erase(right.stops.begin(), right.stops.begin() + static_cast<std::ptrdiff_t>(skip));
    right.waypoints.erase(right.waypoints.begin());
  }
  CoveringPath path;
  path.construction = c;
  path.waypoints = std::move(left.waypoints);
  if (!right.waypoints.empty()) {
    route_vh(path.waypoints, right.waypoints.front());
    for (const auto& w : right.waypoints) push_waypoint(path.waypoints, w);
  }
  std::set<Point> seen;
  for (const std::vector<Point>* piece_stops : {&std::as_const(left.stops), &std::as_const(right.stops)}) {
    for (const auto& s : *piece_stops) {
      if (seen.insert(s).second) path.stops.push_back(s);
    }
  }
  path.L = path_length(path.waypoints);
  return path;
}

CoveringPath single(Piece piece, const Construction& c) { return join(std::move(piece), Piece{}, c, 0); }

void require_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in [0, 1)");
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (a.x == b.x) return p.x == a.x && p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
  if (a.y == b.y) return p.y == a.y && p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x);
  return false;
}

std::vector<std::int64_t> discrete_abscissae(std::int64_t k) {
  std::vector<std::int64_t> xs{1};
  for (std::int64_t d = 2; d <= 2 * k; d += 2) xs.push_back(d);
  xs.push_back(2 * k + 1);
  return xs;
}

// Explicit ceiling of an up-and-down pattern on a strip of the given width.
CostPair strip_bound(double width, double m, double sep, double spacing) {
  return {width * m / sep + 3 * m, (width / sep + 2) * (m / spacing + 2)};
}

CostPair zigzag_bound(double x_width, double m, std::int64_t k) {
  const double kk = static_cast<double>(k);
  const double M = 2 * kk * kk + 2 * kk + 1;
  const double T = ((x_width + 1) * (m + 1) + 4 * kk * (x_width + m + 2) + 4 * kk * (2 * kk - 1)) / M;
  return {(2 * kk + 1) * T + kZigzagLengthSlack * m, T};
}

CostPair discrete_bound(std::int64_t d, double width, double m, std::int64_t k) {
  const double kk = static_cast<double>(k);
  if (d == 2 * k + 1) return zigzag_bound(width, m, k);
  if (d == 1) return {width * m / (2 * kk + 1) + 3 * m, (width / (2 * kk + 1) + 2) * (m + 1)};
  return strip_bound(width, m, 2 * kk + 1 - static_cast<double>(d) / 2, static_cast<double>(d));
}

}  // namespace

std::string Construction::tag() const {
  switch (kind) {
    case ConstructionKind::UpDown: return "UAD";
    case ConstructionKind::Mixed: return "MIXED";
    case ConstructionKind::Discrete: return "DISCRETE";
    case ConstructionKind::Zigzag: return "ZIGZAG";
    case ConstructionKind::MixedDiscrete: return "MIXED_DISCRETE";
    case ConstructionKind::SingleStop: return "SINGLE_STOP";
    case ConstructionKind::Trivial: return "TRIVIAL";
  }
  return "?";
}

std::string Construction::describe() const {
  std::ostringstream os;
  os << tag();
  switch (kind) {
    case ConstructionKind::UpDown:
    case ConstructionKind::Discrete: os << "(d=" << to_string(d) << ")"; break;
    case ConstructionKind::Mixed: os << "(d=" << to_string(d) << ", gamma=" << gamma << ")"; break;
    case ConstructionKind::MixedDiscrete:
      os << "(d1=" << to_string(d) << ", d2=" << d2 << ", gamma=" << gamma << ")";
      break;
    default: break;
  }
  return os.str();
}

Rational path_length(const std::vector<Point>& waypoints) {
  Rational L(0);
  for (std::size_t i = 1; i < waypoints.size(); ++i) L += l1_distance(waypoints[i - 1], waypoints[i]);
  return L;
}

CostPair path_cost(const CoveringPath& path) {
  return {to_double(path_length(path.waypoints)), static_cast<double>(path.stops.size())};
}

bool path_consistent(const CoveringPath& path) {
  if (path.L != path_length(path.waypoints)) return false;
  std::set<Point> distinct(path.stops.begin(), path.stops.end());
  if (distinct.size() != path.stops.size()) return false;
  for (const auto& s : path.stops) {
    bool found = path.waypoints.size() == 1 && path.waypoints.front() == s;
    for (std::size_t i = 1; i < path.waypoints.size() && !found; ++i) {
      found = on_segment(s, path.waypoints[i - 1], path.waypoints[i]);
    }
    if (!found) return false;
  }
  return true;
}

std::int64_t split_column(double gamma, std::int64_t n) {
  require_gamma(gamma);
  return std::clamp<std::int64_t>(static_cast<std::int64_t>(std::ceil(gamma * static_cast<double>(n) - 1e-9)), 0, n);
}

CoveringPath build_up_down(const Rational& d, const GridSpec& grid, const Rational& k) {
  if (k <= 0) throw std::invalid_argument("k must be positive");
  if (d <= 0 || d > 2 * k) throw std::invalid_argument("d must lie in (0, 2k]");
  const Rational sep = 2 * k - d / 2;
  return single(up_down_strip(Rational(0), Rational(grid.n()), grid.m(), sep, d, d / 2),
                Construction{ConstructionKind::UpDown, d});
}

CoveringPath build_mixed_up_down(std::int64_t d, double gamma, const GridSpec& grid, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  if (d % 2 != 0 || d < 2 || d > 2 * k - 2) throw std::invalid_argument("mixed paths need an even d in [2, 2k-2]");
  require_gamma(gamma);
  const std::int64_t s = split_column(gamma, grid.n());
  const Construction c{ConstructionKind::Mixed, Rational(d), d + 2, gamma};
  auto strip = [&](std::int64_t dd, std::int64_t x0, std::int64_t width) {
    return up_down_strip(Rational(x0), Rational(width), grid.m(), Rational(2 * k - dd / 2), Rational(dd),
                         Rational(dd / 2));
  };
  if (s == 0) return single(strip(d + 2, 0, grid.n()), c);
  if (s == grid.n()) return single(strip(d, 0, grid.n()), c);
  return join(strip(d, 0, s), strip(d + 2, s, grid.n() - s), c, grid.m());
}

CoveringPath build_discrete_up_down(std::int64_t d, const GridSpec& grid, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  if (!(d == 1 || (d % 2 == 0 && d >= 2 && d <= 2 * k))) {
    throw std::invalid_argument("discrete paths need d = 1 or an even d in [2, 2k]");
  }
  return single(discrete_strip(d, 0, grid.n(), grid.m(), k), Construction{ConstructionKind::Discrete, Rational(d)});
}

CoveringPath build_zigzag(const GridSpec& grid, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  return single(zigzag_strip(0, grid.n(), grid.m(), k),
                Construction{ConstructionKind::Zigzag, Rational(2 * k + 1)});
}

CoveringPath build_mixed_discrete(std::int64_t d1, std::int64_t d2, double gamma, const GridSpec& grid,
                                  std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  const auto xs = discrete_abscissae(k);
  const auto it = std::find(xs.begin(), xs.end(), d1);
  if (it == xs.end() || it + 1 == xs.end() || *(it + 1) != d2) {
    throw std::invalid_argument("d1 and d2 must be adjacent in {1, 2, 4, ..., 2k, 2k+1}");
  }
  require_gamma(gamma);
  const std::int64_t s = split_column(gamma, grid.n());
  const Construction c{ConstructionKind::MixedDiscrete, Rational(d1), d2, gamma};
  auto strip = [&](std::int64_t d, std::int64_t x0, std::int64_t x1) {
    return d == 2 * k + 1 ? zigzag_strip(x0, x1, grid.m(), k) : discrete_strip(d, x0, x1 - x0, grid.m(), k);
  };
  if (s == 0) return single(strip(d2, 0, grid.n()), c);
  if (s == grid.n()) return single(strip(d1, 0, grid.n()), c);
  return join(strip(d1, 0, s), strip(d2, s, grid.n()), c, grid.m());
}

bool TessellationLattice::contains(std::int64_t a, std::int64_t b) const {
  return mod(k * a + (k + 1) * b, modulus()) == 0;
}

std::int64_t TessellationLattice::traversal(std::int64_t a, std::int64_t b) const {
  return floor_div(k * a + (k + 1) * b, modulus());
}

CostPair explicit_cost_bound(const Construction& c, const GridSpec& grid, const Rational& k) {
  const double m = static_cast<double>(grid.m());
  const double n = static_cast<double>(grid.n());
  const double kd = to_double(k);
  const std::int64_t ki = cppg::floor(k);
  switch (c.kind) {
    case ConstructionKind::UpDown: {
      const double d = to_double(c.d);
      return strip_bound(n, m, 2 * kd - d / 2, d);
    }
    case ConstructionKind::Mixed: {
      const double d = to_double(c.d);
      const double r1 = 2 * kd - d / 2;
      const double r2 = 2 * kd - (d + 2) / 2;
      const double g = c.gamma;
      return {g * m * n / r1 + (1 - g) * m * n / r2 + 10 * m,
              g * m * n / (d * r1) + (1 - g) * m * n / ((d + 2) * r2) + 10 * m + 12};
    }
    case ConstructionKind::Discrete: return discrete_bound(c.d.numerator(), n, m, ki);
    case ConstructionKind::Zigzag: return zigzag_bound(n, m, ki);
    case ConstructionKind::MixedDiscrete: {
      const auto s = static_cast<double>(split_column(c.gamma, grid.n()));
      if (s == 0) return discrete_bound(c.d2, n, m, ki);
      if (s == n) return discrete_bound(c.d.numerator(), n, m, ki);
      const CostPair a = discrete_bound(c.d.numerator(), s, m, ki);
      const CostPair b = discrete_bound(c.d2, n - s, m, ki);
      return {a.L + b.L + 2 * m, a.T + b.T};
    }
    case ConstructionKind::SingleStop: return {0.0, 1.0};
    case ConstructionKind::Trivial: break;
  }
  throw std::invalid_argument("no explicit bound for the trivial construction");
}

}  // namespace cppg
