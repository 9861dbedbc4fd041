#pragma once

#include "cppg/optimizer.hpp"
#include "cppg/oracle.hpp"
#include "cppg/path.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace cppg {

/// Request parameters as received from the command line or the query string.
using Params = std::map<std::string, std::string>;

/// Invalid request; `field` names the offending parameter.
class RequestError : public std::invalid_argument {
 public:
  RequestError(std::string field, const std::string& message)
      : std::invalid_argument(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

struct ServiceLimits {
  std::int64_t max_area = 4'000'000;      // m * n
  std::int64_t max_side = 100'000;
  double oracle_time_budget = 30.0;       // seconds
  int oracle_max_stops = 12;
};

// Handlers shared by the CLI and the HTTP server. They throw RequestError on
// bad input and OracleLimitError when the oracle gives up.
Response handle_solve(const Params& p, const ServiceLimits& limits = {});
Response handle_frontier(const Params& p, const ServiceLimits& limits = {});
Response handle_svg(const Params& p, const ServiceLimits& limits = {});
Response handle_oracle(const Params& p, const ServiceLimits& limits = {});
/// `path_json` is a path or solution document; params need k.
Response handle_verify(const std::string& path_json, const Params& p);

/// Maps handler exceptions to a status and an {error, field} body.
Response error_response(const std::exception& e);

// Serialization.
std::string solution_to_json(const Solution& s, const Objective& objective);
std::string pareto_to_json(const ParetoReport& r);
std::string curve_to_json(const TradeoffCurve& c);
std::string path_to_json(const CoveringPath& p);
std::string frontier_to_json(const std::vector<FrontierPoint>& f, const GridSpec& grid, const Variant& v);
CoveringPath path_from_json(const std::string& text);

struct SvgOptions {
  bool coverage = false;
  Rational radius{1};
};
std::string render_svg(const CoveringPath& path, const GridSpec& grid, const SvgOptions& opt = {});

}  // namespace cppg
