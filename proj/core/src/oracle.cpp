#include "cppg/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace cppg {
namespace {

using Mask = unsigned __int128;

Mask bit(std::size_t i) { return Mask{1} << i; }

std::int64_t l1(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
  return std::abs(ax - bx) + std::abs(ay - by);
}

// Shortest open path through pts, found by depth-first branch and bound with an
// MST bound; returns nothing unless some path is strictly shorter than cutoff.
class PathSearch {
 public:
  PathSearch(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts, std::int64_t cutoff)
      : pts_(pts), n_(pts.size()), best_(cutoff), used_(pts.size(), false) {}

  std::optional<std::int64_t> run(std::vector<std::size_t>* order) {
    bool found = false;
    for (std::size_t s = 0; s < n_; ++s) {
      path_ = {s};
      used_[s] = true;
      found |= extend(0);
      used_[s] = false;
    }
    if (!found) return std::nullopt;
    if (order) *order = best_path_;
    return best_;
  }

 private:
  std::int64_t dist(std::size_t a, std::size_t b) const {
    return l1(pts_[a].first, pts_[a].second, pts_[b].first, pts_[b].second);
  }

  // Spanning tree over the current endpoint and the unvisited points.
  std::int64_t mst_rest(std::size_t cur) const {
    std::vector<std::size_t> rest{cur};
    for (std::size_t i = 0; i < n_; ++i) {
      if (!used_[i]) rest.push_back(i);
    }
    std::vector<std::int64_t> d(rest.size(), std::numeric_limits<std::int64_t>::max());
    std::vector<bool> in(rest.size(), false);
    d[0] = 0;
    std::int64_t total = 0;
    for (std::size_t it = 0; it < rest.size(); ++it) {
      std::size_t u = rest.size();
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (!in[i] && (u == rest.size() || d[i] < d[u])) u = i;
      }
      in[u] = true;
      total += d[u];
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (!in[i]) d[i] = std::min(d[i], dist(rest[u], rest[i]));
      }
    }
    return total;
  }

  bool extend(std::int64_t len) {
    const std::size_t cur = path_.back();
    if (path_.size() == n_) {
      // Each undirected path is seen from both ends; keep one orientation.
      if (n_ > 1 && path_.front() > path_.back()) return false;
      if (len >= best_) return false;
      best_ = len;
      best_path_ = path_;
      return true;
    }
    if (len + mst_rest(cur) >= best_) return false;
    std::vector<std::pair<std::int64_t, std::size_t>> next;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!used_[i]) next.push_back({dist(cur, i), i});
    }
    std::sort(next.begin(), next.end());
    bool found = false;
    for (const auto& [d, i] : next) {
      if (len + d >= best_) break;
      used_[i] = true;
      path_.push_back(i);
      found |= extend(len + d);
      path_.pop_back();
      used_[i] = false;
    }
    return found;
  }

  const std::vector<std::pair<std::int64_t, std::int64_t>>& pts_;
  std::size_t n_;
  std::int64_t best_;
  std::vector<bool> used_;
  std::vector<std::size_t> path_, best_path_;
};

// Coordinates doubled so edge midpoints are integral.
struct Critical {
  std::int64_t x2, y2;
};

class Search {
 public:
  Search(const GridSpec& grid, VariantKind variant, std::int64_t k, const OracleLimits& limits)
      : grid_(grid), limits_(limits), start_(std::chrono::steady_clock::now()) {
    for (std::int64_t y = 0; y <= grid.m(); ++y) {
      for (std::int64_t x = 0; x <= grid.n(); ++x) cand_.push_back({x, y});
    }
    std::vector<Critical> crit;
    for (const auto& [x, y] : cand_) crit.push_back({2 * x, 2 * y});
    if (variant == VariantKind::Continuous) {
      for (std::int64_t y = 0; y <= grid.m(); ++y) {
        for (std::int64_t x = 0; x < grid.n(); ++x) crit.push_back({2 * x + 1, 2 * y});
      }
      for (std::int64_t x = 0; x <= grid.n(); ++x) {
        for (std::int64_t y = 0; y < grid.m(); ++y) crit.push_back({2 * x, 2 * y + 1});
      }
    }
    if (crit.size() > 128) throw OracleLimitError("instance too large for oracle");
    full_ = crit.size() == 128 ? ~Mask{0} : bit(crit.size()) - 1;
    // Lattice points within k; edge midpoints within k - 1/2 (doubled: 2k - 1).
    for (const auto& [cx, cy] : cand_) {
      Mask m = 0;
      for (std::size_t i = 0; i < crit.size(); ++i) {
        const bool mid = (crit[i].x2 % 2) + (crit[i].y2 % 2) > 0;
        const std::int64_t d2 = l1(2 * cx, 2 * cy, crit[i].x2, crit[i].y2);
        if (d2 <= (mid ? 2 * k - 1 : 2 * k)) m |= bit(i);
      }
      cover_.push_back(m);
    }
    for (std::size_t i = 0; i < crit.size(); ++i) {
      std::vector<std::size_t> who;
      for (std::size_t c = 0; c < cand_.size(); ++c) {
        if (cover_[c] & bit(i)) who.push_back(c);
      }
      Box b;
      for (auto c : who) {
        b.x0 = std::min(b.x0, cand_[c].first);
        b.x1 = std::max(b.x1, cand_[c].first);
        b.y0 = std::min(b.y0, cand_[c].second);
        b.y1 = std::max(b.y1, cand_[c].second);
      }
      reach_.push_back(b);
      coverers_.push_back(std::move(who));
    }
    max_cover_ = 0;
    for (auto m : cover_) max_cover_ = std::max(max_cover_, popcount(m));
    build_symmetries();
  }

  std::vector<FrontierPoint> run() {
    std::vector<FrontierPoint> frontier;
    std::int64_t incumbent = std::numeric_limits<std::int64_t>::max();
    for (int T = 1;; ++T) {
      if (T - 1 >= incumbent) break;  // any larger set is dominated
      if (T > limits_.max_stops) throw OracleLimitError("instance too large for oracle");
      target_ = T;
      bound_ = incumbent;
      best_.clear();
      chosen_.clear();
      dfs(0, 0);
      if (!best_.empty()) {
        std::vector<Point> ordered;
        for (auto c : best_) ordered.push_back(lattice_point(cand_[c].first, cand_[c].second));
        frontier.push_back({bound_, T, std::move(ordered)});
        incumbent = bound_;
      }
    }
    return frontier;
  }

 private:
  static int popcount(Mask m) {
    return __builtin_popcountll(static_cast<std::uint64_t>(m)) + __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
  }

  static std::size_t lowest(Mask m) {
    const auto lo = static_cast<std::uint64_t>(m);
    if (lo) return static_cast<std::size_t>(__builtin_ctzll(lo));
    return 64 + static_cast<std::size_t>(__builtin_ctzll(static_cast<std::uint64_t>(m >> 64)));
  }

  void check_time() {
    if (++ticks_ % 4096 != 0) return;
    const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
    if (spent.count() > limits_.time_budget_seconds) throw OracleLimitError("instance too large for oracle");
  }

  struct Box {
    std::int64_t x0 = std::numeric_limits<std::int64_t>::max(), y0 = std::numeric_limits<std::int64_t>::max();
    std::int64_t x1 = -1, y1 = -1;
  };

  // Any completion holds the chosen stops plus one coverer of every uncovered
  // point, so its bounding box (a lower bound on L) spans at least this much.
  std::int64_t bbox_bound(Mask uncovered = 0) const {
    std::int64_t x0 = std::numeric_limits<std::int64_t>::max(), y0 = x0, x1 = -1, y1 = -1;
    for (auto c : chosen_) {
      x0 = std::min(x0, cand_[c].first);
      x1 = std::max(x1, cand_[c].first);
      y0 = std::min(y0, cand_[c].second);
      y1 = std::max(y1, cand_[c].second);
    }
    while (uncovered) {
      const std::size_t e = lowest(uncovered);
      uncovered &= uncovered - 1;
      x0 = std::min(x0, reach_[e].x1);
      x1 = std::max(x1, reach_[e].x0);
      y0 = std::min(y0, reach_[e].y1);
      y1 = std::max(y1, reach_[e].y0);
    }
    return std::max<std::int64_t>(0, x1 - x0) + std::max<std::int64_t>(0, y1 - y0);
  }

  // Branch on the lowest uncovered critical point; candidates that could have
  // covered it earlier in the branch order are excluded to avoid repeats.
  void dfs(Mask covered, Mask excluded) {
    check_time();
    const int left = target_ - static_cast<int>(chosen_.size());
    if (covered == full_) {
      if (left == 0) leaf();
      return;
    }
    if (left == 0) return;
    if (popcount(full_ & ~covered) > left * max_cover_) return;
    if (bbox_bound(full_ & ~covered) >= bound_) return;
    const std::size_t e = lowest(full_ & ~covered);
    Mask local_excl = excluded;
    for (std::size_t c : coverers_[e]) {
      if (local_excl & bit(c)) continue;
      chosen_.push_back(c);
      dfs(covered | cover_[c], local_excl);
      chosen_.pop_back();
      local_excl |= bit(c);
    }
  }

  void leaf() {
    std::vector<std::size_t> s = chosen_;
    std::sort(s.begin(), s.end());
    if (!canonical(s)) return;
    if (bbox_bound() >= bound_) return;
    if (mst(s) >= bound_) return;
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (auto c : s) pts.push_back(cand_[c]);
    std::vector<std::size_t> order;
    if (const auto L = PathSearch(pts, bound_).run(&order)) {
      bound_ = *L;
      best_.clear();
      for (auto i : order) best_.push_back(s[i]);
    }
  }

  std::int64_t mst(const std::vector<std::size_t>& s) const {
    const std::size_t n = s.size();
    std::vector<std::int64_t> dist(n, std::numeric_limits<std::int64_t>::max());
    std::vector<bool> in(n, false);
    dist[0] = 0;
    std::int64_t total = 0;
    for (std::size_t it = 0; it < n; ++it) {
      std::size_t u = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (!in[i] && (u == n || dist[i] < dist[u])) u = i;
      }
      in[u] = true;
      total += dist[u];
      for (std::size_t i = 0; i < n; ++i) {
        const auto& a = cand_[s[u]];
        const auto& b = cand_[s[i]];
        if (!in[i]) dist[i] = std::min(dist[i], l1(a.first, a.second, b.first, b.second));
      }
    }
    return total;
  }

  // Symmetries of the rectangle as permutations of candidate indices.
  void build_symmetries() {
    const std::int64_t n = grid_.n(), m = grid_.m();
    auto index = [&](std::int64_t x, std::int64_t y) { return static_cast<std::size_t>(y * (n + 1) + x); };
    std::vector<std::array<std::int64_t, 5>> maps = {
        {1, 0, 0, 1, 0}, {-1, 0, 0, 1, 0}, {1, 0, 0, -1, 0}, {-1, 0, 0, -1, 0}};
    if (m == n) {
      for (auto mp : std::vector<std::array<std::int64_t, 5>>(maps)) maps.push_back({mp[0], mp[1], mp[2], mp[3], 1});
    }
    for (const auto& mp : maps) {
      std::vector<std::size_t> perm(cand_.size());
      for (std::size_t c = 0; c < cand_.size(); ++c) {
        auto [x, y] = cand_[c];
        if (mp[4]) std::swap(x, y);
        if (mp[0] < 0) x = n - x;
        if (mp[3] < 0) y = m - y;
        perm[c] = index(x, y);
      }
      if (mp != maps.front()) syms_.push_back(std::move(perm));
    }
  }

  bool canonical(const std::vector<std::size_t>& s) const {
    for (const auto& perm : syms_) {
      std::vector<std::size_t> t;
      t.reserve(s.size());
      for (auto c : s) t.push_back(perm[c]);
      std::sort(t.begin(), t.end());
      if (t < s) return false;
    }
    return true;
  }

  const GridSpec& grid_;
  OracleLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::pair<std::int64_t, std::int64_t>> cand_;
  std::vector<Mask> cover_;
  std::vector<std::vector<std::size_t>> coverers_;
  std::vector<Box> reach_;
  std::vector<std::vector<std::size_t>> syms_;
  Mask full_ = 0;
  int max_cover_ = 0;
  int target_ = 0;
  std::int64_t bound_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::uint64_t ticks_ = 0;
};

}  // namespace

std::vector<FrontierPoint> exact_pareto(const GridSpec& grid, VariantKind variant, std::int64_t k,
                                        const OracleLimits& limits) {
  if (variant != VariantKind::Continuous && variant != VariantKind::Discrete) {
    throw std::invalid_argument("oracle supports the C and D variants");
  }
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  if (grid.lattice_size() > limits.max_lattice_points || grid.lattice_size() > 128) {
    throw OracleLimitError("instance too large for oracle");
  }
  Search search(grid, variant, k, limits);
  return search.run();
}

std::int64_t shortest_hamiltonian_path(const std::vector<Point>& pts, std::vector<std::size_t>* order) {
  const std::size_t n = pts.size();
  if (n == 0) throw std::invalid_argument("no stops");
  if (n > 20) throw OracleLimitError("too many stops for exact path DP");
  if (n == 1) {
    if (order) *order = {0};
    return 0;
  }
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = l1_distance(pts[i], pts[j]).numerator();
  }
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::int64_t> dp((full + 1) * n, kInf);
  std::vector<std::int32_t> parent((full + 1) * n, -1);
  for (std::size_t i = 0; i < n; ++i) dp[(std::size_t{1} << i) * n + i] = 0;
  for (std::size_t s = 1; s <= full; ++s) {
    for (std::size_t last = 0; last < n; ++last) {
      const std::int64_t cur = dp[s * n + last];
      if (cur >= kInf || !(s & (std::size_t{1} << last))) continue;
      for (std::size_t nx = 0; nx < n; ++nx) {
        if (s & (std::size_t{1} << nx)) continue;
        const std::size_t t = s | (std::size_t{1} << nx);
        const std::int64_t v = cur + d[last][nx];
        if (v < dp[t * n + nx]) {
          dp[t * n + nx] = v;
          parent[t * n + nx] = static_cast<std::int32_t>(last);
        }
      }
    }
  }
  std::size_t end = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (dp[full * n + i] < dp[full * n + end]) end = i;
  }
  if (order) {
    order->clear();
    std::size_t s = full, cur = end;
    while (true) {
      order->push_back(cur);
      const auto p = parent[s * n + cur];
      s &= ~(std::size_t{1} << cur);
      if (p < 0) break;
      cur = static_cast<std::size_t>(p);
    }
    std::reverse(order->begin(), order->end());
  }
  return dp[full * n + end];
}

std::int64_t brute_ball_overlap_count(std::int64_t p, std::int64_t q, std::int64_t k) {
  std::int64_t count = 0;
  for (std::int64_t x = -k; x <= k; ++x) {
    for (std::int64_t y = -k; y <= k; ++y) {
      if (std::abs(x) + std::abs(y) <= k && std::abs(x - p) + std::abs(y - q) <= k) ++count;
    }
  }
  return count;
}

double brute_ball_overlap_area(double p, double q, double k) {
  using P = std::array<double, 2>;
  std::vector<P> poly = {{k, 0}, {0, k}, {-k, 0}, {0, -k}};
  // Clip by the four half-planes of the second diamond: s1 (x-p) + s2 (y-q) <= k.
  for (const auto& [s1, s2] : std::array<std::pair<double, double>, 4>{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}}) {
    auto val = [&](const P& v) { return s1 * (v[0] - p) + s2 * (v[1] - q) - k; };
    std::vector<P> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const P& a = poly[i];
      const P& b = poly[(i + 1) % poly.size()];
      const double va = val(a), vb = val(b);
      if (va <= 0) out.push_back(a);
      if ((va < 0 && vb > 0) || (va > 0 && vb < 0)) {
        const double t = va / (va - vb);
        out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
      }
    }
    poly = std::move(out);
    if (poly.empty()) return 0.0;
  }
  double area = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P& a = poly[i];
    const P& b = poly[(i + 1) % poly.size()];
    area += a[0] * b[1] - b[0] * a[1];
  }
  return std::abs(area) / 2;
}

Rational brute_coverage_max_dist(std::span<const Point> stops, const GridSpec& grid, CoverageRegion region) {
  Rational best(0);
  auto visit = [&](const Rational& x, const Rational& y) { best = std::max(best, dist_to_stops(Point{x, y}, stops)); };
  const Rational half(1, 2);
  for (std::int64_t y = 0; y <= grid.m(); ++y) {
    for (std::int64_t x = 0; x <= grid.n(); ++x) {
      visit(Rational(x), Rational(y));
      if (region == CoverageRegion::Lattice) continue;
      if (x < grid.n()) visit(x + half, Rational(y));
      if (y < grid.m()) visit(Rational(x), y + half);
      if (region == CoverageRegion::Rectangle && x < grid.n() && y < grid.m()) visit(x + half, y + half);
    }
  }
  return best;
}

}  // namespace cppg
