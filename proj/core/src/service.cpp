#include "cppg/service.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>

namespace cppg {
namespace {

using nlohmann::json;

const std::string* find(const Params& p, const std::string& key) {
  auto it = p.find(key);
  return it == p.end() ? nullptr : &it->second;
}

std::int64_t integer_param(const Params& p, const std::string& key, std::optional<std::int64_t> fallback = {}) {
  const std::string* v = find(p, key);
  if (!v) {
    if (fallback) return *fallback;
    throw RequestError(key, "missing parameter '" + key + "'");
  }
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || ptr != v->data() + v->size()) {
    throw RequestError(key, "'" + key + "' must be an integer");
  }
  return out;
}

double real_param(const Params& p, const std::string& key) {
  const std::string* v = find(p, key);
  try {
    const double out = to_double(parse_rational(*v));
    if (!std::isfinite(out)) throw std::invalid_argument("not finite");
    return out;
  } catch (const std::exception&) {
    throw RequestError(key, "'" + key + "' must be a number");
  }
}

bool flag_param(const Params& p, const std::string& key) {
  const std::string* v = find(p, key);
  if (!v) return false;
  if (*v == "1" || *v == "true" || v->empty()) return true;
  if (*v == "0" || *v == "false") return false;
  throw RequestError(key, "'" + key + "' must be true or false");
}

GridSpec grid_param(const Params& p, const ServiceLimits& limits) {
  const std::int64_t m = integer_param(p, "m");
  if (m <= 0) throw RequestError("m", "m must be positive");
  if (m > limits.max_side) throw RequestError("m", "m exceeds the service limit");
  const std::int64_t n = integer_param(p, "n");
  if (n <= 0) throw RequestError("n", "n must be positive");
  if (n > m) throw RequestError("n", "n must not exceed m (m is the taller side)");
  if (m * n > limits.max_area) throw RequestError("m", "grid area exceeds the service limit");
  return GridSpec(m, n);
}

Rational k_param(const Params& p) {
  const std::string* v = find(p, "k");
  if (!v) throw RequestError("k", "missing parameter 'k'");
  Rational k;
  try {
    k = parse_rational(*v);
  } catch (const std::exception&) {
    throw RequestError("k", "k must be a rational such as 3/2 or 1.5");
  }
  if (k <= 0) throw RequestError("k", "k must be positive");
  if (k > 1000) throw RequestError("k", "k exceeds the service limit");
  return k;
}

Objective objective_param(const Params& p) {
  if (const std::string* v = find(p, "min")) {
    if (find(p, "alpha") || find(p, "beta")) throw RequestError("min", "give either min or alpha/beta");
    if (*v == "length") return Objective::min_length();
    if (*v == "stops") return Objective::min_stops();
    throw RequestError("min", "min must be 'length' or 'stops'");
  }
  const double alpha = find(p, "alpha") ? real_param(p, "alpha") : 1.0;
  const double beta = find(p, "beta") ? real_param(p, "beta") : 1.0;
  if (alpha < 0) throw RequestError("alpha", "alpha must be nonnegative");
  if (beta < 0) throw RequestError("beta", "beta must be nonnegative");
  if (alpha == 0 && beta == 0) throw RequestError("alpha", "alpha and beta must not both be zero");
  return Objective::linear(alpha, beta);
}

Solution run_solve(const Params& p, const ServiceLimits& limits, Objective& obj, GridSpec& grid) {
  grid = grid_param(p, limits);
  const Rational k = k_param(p);
  obj = objective_param(p);
  SolveOptions opt;
  opt.relaxed = flag_param(p, "relaxed");
  if (opt.relaxed && k.denominator() > 4) throw RequestError("k", "relaxed solves need k with denominator <= 4");
  return solve(grid, k, obj, opt);
}

Response json_response(std::string body) { return {200, "application/json", std::move(body)}; }

}  // namespace

Response handle_solve(const Params& p, const ServiceLimits& limits) {
  Objective obj;
  GridSpec grid(1, 1);
  const Solution s = run_solve(p, limits, obj, grid);
  return json_response(solution_to_json(s, obj));
}

Response handle_frontier(const Params& p, const ServiceLimits& limits) {
  const GridSpec grid = grid_param(p, limits);
  const Rational k = k_param(p);
  const std::int64_t samples = integer_param(p, "samples", 5);
  if (samples < 2 || samples > 50) throw RequestError("samples", "samples must lie in [2, 50]");
  return json_response(pareto_to_json(pareto_report(grid, k, static_cast<int>(samples))));
}

Response handle_svg(const Params& p, const ServiceLimits& limits) {
  Objective obj;
  GridSpec grid(1, 1);
  const Solution s = run_solve(p, limits, obj, grid);
  SvgOptions opt;
  opt.coverage = flag_param(p, "coverage");
  opt.radius = s.variant.radius();
  return {200, "image/svg+xml", render_svg(s.path, grid, opt)};
}

Response handle_oracle(const Params& p, const ServiceLimits& limits) {
  const GridSpec grid = grid_param(p, limits);
  const Rational k = k_param(p);
  const Variant v = classify(k);
  if (v.kind == VariantKind::TrivialAllStops) throw RequestError("k", "the oracle needs k >= 1");
  OracleLimits ol;
  ol.max_stops = static_cast<int>(integer_param(p, "max_stops", ol.max_stops));
  if (ol.max_stops < 1 || ol.max_stops > limits.oracle_max_stops) {
    throw RequestError("max_stops", "max_stops must lie in [1, " + std::to_string(limits.oracle_max_stops) + "]");
  }
  ol.time_budget_seconds = limits.oracle_time_budget;
  return json_response(frontier_to_json(exact_pareto(grid, v.kind, v.k_effective, ol), grid, v));
}

Response handle_verify(const std::string& path_json, const Params& p) {
  const Rational k = k_param(p);
  const CoveringPath path = path_from_json(path_json);
  if (path.stops.empty()) throw RequestError("path", "path has no stops");
  std::int64_t m = 0, n = 0;
  try {
    const json doc = json::parse(path_json);
    if (doc.contains("m") && doc.contains("n")) {
      m = doc.at("m").get<std::int64_t>();
      n = doc.at("n").get<std::int64_t>();
    }
  } catch (const json::exception&) {
  }
  if (find(p, "m")) m = integer_param(p, "m");
  if (find(p, "n")) n = integer_param(p, "n");
  if (m <= 0) throw RequestError("m", "grid size missing: pass m and n or embed them in the document");
  if (n <= 0 || n > m) throw RequestError("n", "n must lie in [1, m]");
  const GridSpec grid(m, n);
  const Variant v = flag_param(p, "relaxed") ? relaxed_variant(k) : classify(k);

  bool covered = false;
  try {
    if (v.kind == VariantKind::Relaxed || (v.region() == CoverageRegion::Rectangle &&
                                           !std::all_of(path.stops.begin(), path.stops.end(), is_lattice_point))) {
      covered = covers_rectangle(path.stops, grid, v.radius());
    } else {
      covered = verify_coverage(path.stops, grid, v.region(), v.radius());
    }
  } catch (const std::invalid_argument& e) {
    throw RequestError("path", e.what());
  }
  const CostPair cost = path_cost(path);
  json j;
  j["variant"] = variant_name(v.kind);
  j["covered"] = covered;
  j["region"] = v.region() == CoverageRegion::Rectangle ? "RECTANGLE"
                : v.region() == CoverageRegion::Lattice ? "LATTICE" : "EDGES";
  j["radius"] = to_string(v.radius());
  j["L"] = cost.L;
  j["T"] = cost.T;
  if (v.kind != VariantKind::TrivialAllStops && cost.T > 1) {
    const double kk = v.kind == VariantKind::Relaxed ? to_double(k) : static_cast<double>(v.k_effective);
    j["tradeoff_ok"] = tradeoff_holds(cost, grid, v.kind, kk);
  } else {
    j["tradeoff_ok"] = nullptr;
  }
  return json_response(j.dump());
}

Response error_response(const std::exception& e) {
  json j;
  j["error"] = e.what();
  if (const auto* r = dynamic_cast<const RequestError*>(&e)) {
    j["field"] = r->field();
    return {400, "application/json", j.dump()};
  }
  j["field"] = nullptr;
  if (dynamic_cast<const OracleLimitError*>(&e)) return {422, "application/json", j.dump()};
  if (dynamic_cast<const std::invalid_argument*>(&e)) return {400, "application/json", j.dump()};
  return {500, "application/json", j.dump()};
}

}  // namespace cppg
