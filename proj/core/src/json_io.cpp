#include "cppg/service.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace cppg {
namespace {

using nlohmann::json;

json number(const Rational& q) {
  if (is_integer(q)) return q.numerator();
  return to_double(q);
}

json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

bool all_integral(const std::vector<Point>& pts) {
  return std::all_of(pts.begin(), pts.end(), is_lattice_point);
}

json points(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back({number(p.x), number(p.y)});
  return a;
}

json points_exact(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back({to_string(p.x), to_string(p.y)});
  return a;
}

json construction_params(const Construction& c) {
  json j = json::object();
  switch (c.kind) {
    case ConstructionKind::UpDown:
    case ConstructionKind::Discrete:
      j["d"] = number(c.d);
      if (!is_integer(c.d)) j["d_exact"] = to_string(c.d);
      break;
    case ConstructionKind::Mixed:
      j["d"] = number(c.d);
      j["gamma"] = c.gamma;
      break;
    case ConstructionKind::MixedDiscrete:
      j["d1"] = number(c.d);
      j["d2"] = c.d2;
      j["gamma"] = c.gamma;
      break;
    case ConstructionKind::Zigzag: j["d"] = number(c.d); break;
    default: break;
  }
  return j;
}

void put_path(json& j, const CoveringPath& p) {
  j["construction"] = p.construction.tag();
  j["params"] = construction_params(p.construction);
  j["L"] = number(p.L);
  j["L_exact"] = to_string(p.L);
  j["T"] = p.T();
  j["waypoints"] = points(p.waypoints);
  j["stops"] = points(p.stops);
  if (!all_integral(p.waypoints)) j["waypoints_exact"] = points_exact(p.waypoints);
  if (!all_integral(p.stops)) j["stops_exact"] = points_exact(p.stops);
}

json curve(const TradeoffCurve& c) {
  json v = json::array();
  for (const auto& x : c.vertices) v.push_back({x.L, x.T});
  json d = json::array();
  for (const auto& x : c.vertices) d.push_back(x.d);
  return {{"variant", variant_name(c.variant)},
          {"role", c.role == CurveRole::Lower ? "LOWER" : "UPPER"},
          {"rhs", c.rhs},
          {"vertices", v},
          {"spacing", d},
          {"ray_T", c.ray_T()},
          {"parametric", c.parametric},
          {"single_stop_feasible", c.single_stop_feasible}};
}

std::vector<Point> read_points(const json& j, const char* key, const char* exact_key) {
  std::vector<Point> out;
  if (j.contains(exact_key)) {
    for (const auto& p : j.at(exact_key)) {
      out.push_back({parse_rational(p.at(0).get<std::string>()), parse_rational(p.at(1).get<std::string>())});
    }
    return out;
  }
  if (!j.contains(key)) throw RequestError(key, std::string("path document lacks '") + key + "'");
  for (const auto& p : j.at(key)) {
    auto coord = [](const json& v) {
      if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
      if (v.is_number()) return from_double_exact(v.get<double>());
      if (v.is_string()) return parse_rational(v.get<std::string>());
      throw RequestError("path", "coordinates must be numbers");
    };
    if (!p.is_array() || p.size() != 2) throw RequestError("path", "points must be [x, y] pairs");
    out.push_back({coord(p.at(0)), coord(p.at(1))});
  }
  return out;
}

}  // namespace

std::string path_to_json(const CoveringPath& p) {
  json j;
  put_path(j, p);
  return j.dump();
}

std::string solution_to_json(const Solution& s, const Objective& objective) {
  json j;
  j["variant"] = variant_name(s.variant.kind);
  j["k_raw"] = to_string(s.variant.k_raw);
  j["k_rounded"] = to_string(s.variant.k_rounded);
  j["k_effective"] = s.variant.k_effective;
  j["m"] = s.m;
  j["n"] = s.n;
  j["objective"] = objective.describe();
  j["d_star"] = s.d_star;
  j["lower_bound_point"] = {{"L", s.lower_bound_point.L}, {"T", s.lower_bound_point.T}};
  j["lower_bound_cost"] = s.lower_bound_cost;
  j["cost"] = number(objective(s.cost));
  j["observed_ratio"] = number(s.observed_ratio);
  const auto& g = s.guarantee;
  json gj;
  gj["status"] = g.status == GuaranteeStatus::Proven ? "proven"
                 : g.status == GuaranteeStatus::Unguaranteed ? "unguaranteed" : "n/a";
  gj["base"] = g.base;
  gj["epsilon"] = g.epsilon ? json(*g.epsilon) : json(nullptr);
  gj["slack"] = g.slack;
  gj["bound"] = g.bound() ? json(*g.bound()) : json(nullptr);
  gj["text"] = g.describe();
  gj["note"] = g.note;
  j["guarantee"] = gj;
  put_path(j, s.path);
  return j.dump();
}

std::string curve_to_json(const TradeoffCurve& c) { return curve(c).dump(); }

std::string pareto_to_json(const ParetoReport& r) {
  json j;
  j["variant"] = variant_name(r.variant.kind);
  j["k_effective"] = r.variant.k_effective;
  j["lower"] = r.lower ? curve(*r.lower) : json(nullptr);
  j["upper"] = r.upper ? curve(*r.upper) : json(nullptr);
  json pts = json::array();
  for (const auto& p : r.constructed) {
    pts.push_back({{"construction", p.construction.tag()},
                   {"params", construction_params(p.construction)},
                   {"L", p.cost.L},
                   {"T", p.cost.T}});
  }
  j["constructed"] = pts;
  return j.dump();
}

std::string frontier_to_json(const std::vector<FrontierPoint>& f, const GridSpec& grid, const Variant& v) {
  json pts = json::array();
  for (const auto& p : f) pts.push_back({{"L", p.L}, {"T", p.T}, {"stops", points(p.stops)}});
  return json{{"variant", variant_name(v.kind)},
              {"k_effective", v.k_effective},
              {"m", grid.m()},
              {"n", grid.n()},
              {"frontier", pts}}
      .dump();
}

CoveringPath path_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw RequestError("path", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw RequestError("path", "path document must be an object");
  CoveringPath p;
  try {
    p.waypoints = read_points(j, "waypoints", "waypoints_exact");
    p.stops = read_points(j, "stops", "stops_exact");
  } catch (const json::exception& e) {
    throw RequestError("path", std::string("malformed path: ") + e.what());
  }
  p.L = path_length(p.waypoints);
  return p;
}

}  // namespace cppg
