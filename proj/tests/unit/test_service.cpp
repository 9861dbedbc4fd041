#include "cppg/http_server.hpp"
#include "cppg/service.hpp"

#include <doctest.h>
#include <httplib.h>
#include <json.hpp>

#include <thread>

using namespace cppg;
using nlohmann::json;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string field_of(const std::function<Response()>& call) {
  try {
    call();
  } catch (const RequestError& e) {
    const Response r = error_response(e);
    CHECK(r.status == 400);
    return json::parse(r.body).at("field").get<std::string>();
  }
  return "";
}

// Server on a free port for the lifetime of the fixture.
struct LiveServer {
  HttpServer server;
  int port = 0;
  std::thread thread;

  LiveServer() : server(ServerOptions{"127.0.0.1", 0, 2, "*", {}}) {
    port = server.bind();
    thread = std::thread([this] { server.listen(); });
  }
  ~LiveServer() {
    server.stop();
    thread.join();
  }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port);
    c.set_read_timeout(60, 0);
    return c;
  }
};

}  // namespace

TEST_CASE("solve handler") {
  const json c = json::parse(handle_solve({{"m", "40"}, {"n", "40"}, {"k", "3"}, {"alpha", "1"}, {"beta", "1"}}).body);
  CHECK(c.at("variant") == "C");
  CHECK(c.at("k_effective") == 3);
  CHECK(c.at("T").get<std::int64_t>() == static_cast<std::int64_t>(c.at("stops").size()));
  CHECK(c.at("guarantee").contains("status"));

  const json d = json::parse(handle_solve({{"m", "10"}, {"n", "10"}, {"k", "3/2"}, {"min", "stops"}}).body);
  CHECK(d.at("variant") == "D");
  CHECK(d.at("construction") == "ZIGZAG");

  const json same = json::parse(handle_solve({{"m", "10"}, {"n", "10"}, {"k", "1.5"}, {"min", "stops"}}).body);
  CHECK(same == d);

  const json trivial = json::parse(handle_solve({{"m", "3"}, {"n", "2"}, {"k", "0.5"}}).body);
  CHECK(trivial.at("variant") == "TRIVIAL");
  CHECK(trivial.at("T") == 12);
}

TEST_CASE("bad parameters name the field") {
  CHECK(field_of([] { return handle_solve({{"m", "0"}, {"n", "0"}, {"k", "1"}}); }) == "m");
  CHECK(field_of([] { return handle_solve({{"n", "3"}, {"k", "1"}}); }) == "m");
  CHECK(field_of([] { return handle_solve({{"m", "3"}, {"n", "5"}, {"k", "1"}}); }) == "n");
  CHECK(field_of([] { return handle_solve({{"m", "3"}, {"n", "x"}, {"k", "1"}}); }) == "n");
  CHECK(field_of([] { return handle_solve({{"m", "3"}, {"n", "3"}, {"k", "abc"}}); }) == "k");
  CHECK(field_of([] { return handle_solve({{"m", "3"}, {"n", "3"}, {"k", "-2"}}); }) == "k");
  CHECK(field_of([] { return handle_solve({{"m", "3"}, {"n", "3"}, {"k", "1"}, {"alpha", "-1"}}); }) == "alpha");
  CHECK(field_of([] { return handle_solve({{"m", "3"}, {"n", "3"}, {"k", "1"}, {"min", "time"}}); }) == "min");
  CHECK(field_of([] { return handle_solve({{"m", "5000"}, {"n", "5000"}, {"k", "1"}}); }) == "m");
  CHECK(field_of([] { return handle_frontier({{"m", "5"}, {"n", "5"}, {"k", "1"}, {"samples", "1"}}); }) == "samples");
  CHECK(field_of([] { return handle_oracle({{"m", "2"}, {"n", "2"}, {"k", "1"}, {"max_stops", "99"}}); }) == "max_stops");
}

TEST_CASE("oracle handler") {
  const json f = json::parse(handle_oracle({{"m", "2"}, {"n", "2"}, {"k", "3/2"}}).body);
  CHECK(f.at("variant") == "D");
  CHECK(f.at("frontier").at(0).at("T") == 3);
  CHECK(f.at("frontier").at(0).at("L") == 2);
  try {
    handle_oracle({{"m", "6"}, {"n", "6"}, {"k", "1"}});
    FAIL("expected a limit error");
  } catch (const OracleLimitError& e) {
    const Response r = error_response(e);
    CHECK(r.status == 422);
    CHECK(json::parse(r.body).at("error") == "instance too large for oracle");
  }
}

TEST_CASE("frontier handler") {
  const json f = json::parse(handle_frontier({{"m", "10"}, {"n", "10"}, {"k", "1.5"}}).body);
  CHECK(f.at("variant") == "D");
  CHECK(f.at("lower").at("role") == "LOWER");
  CHECK(f.at("upper").at("role") == "UPPER");
  CHECK(f.at("lower").at("vertices").size() >= 2);
  CHECK(f.at("constructed").size() >= 3);
  CHECK(f.at("lower").contains("ray_T"));
}

TEST_CASE("svg has one marker per stop") {
  const Params p{{"m", "20"}, {"n", "15"}, {"k", "2"}};
  const json s = json::parse(handle_solve(p).body);
  const Response svg = handle_svg(p);
  CHECK(svg.content_type == "image/svg+xml");
  CHECK(svg.body.rfind("<?xml", 0) == 0);
  CHECK(count(svg.body, "<svg") == 1);
  CHECK(count(svg.body, "<circle") == s.at("T").get<std::size_t>());
  Params cov = p;
  cov["coverage"] = "true";
  CHECK(count(handle_svg(cov).body, "<polygon") == s.at("T").get<std::size_t>());
}

TEST_CASE("paths round-trip through JSON") {
  const std::string body = handle_solve({{"m", "12"}, {"n", "9"}, {"k", "5/2"}}).body;
  const CoveringPath p = path_from_json(body);
  CHECK(path_from_json(path_to_json(p)).stops == p.stops);
  CHECK(path_consistent(p));

  const json v = json::parse(handle_verify(body, {{"k", "5/2"}}).body);
  CHECK(v.at("covered") == true);
  CHECK(v.at("tradeoff_ok") == true);
  CHECK(v.at("variant") == "D");

  json cut = json::parse(body);
  cut["stops"] = json::array({cut["stops"][0]});
  cut.erase("T");
  const json w = json::parse(handle_verify(cut.dump(), {{"k", "5/2"}}).body);
  CHECK(w.at("covered") == false);

  json bare = json::parse(body);
  bare.erase("m");
  bare.erase("n");
  CHECK(field_of([&] { return handle_verify(bare.dump(), {{"k", "5/2"}}); }) == "m");
  CHECK(json::parse(handle_verify(bare.dump(), {{"k", "5/2"}, {"m", "12"}, {"n", "9"}}).body).at("covered") == true);
}

TEST_CASE("relaxed solves carry exact fractional stops") {
  const json r = json::parse(handle_solve({{"m", "12"}, {"n", "8"}, {"k", "3/2"}, {"relaxed", "true"}}).body);
  CHECK(r.at("variant") == "RC");
  const CoveringPath p = path_from_json(r.dump());
  CHECK(covers_rectangle(p.stops, GridSpec(12, 8), Rational(3, 2)));
}

TEST_CASE("http api matches the handlers") {
  LiveServer live;
  REQUIRE(live.port > 0);
  auto cli = live.client();

  const auto res = cli.Get("/api/solve?m=20&n=20&k=2&alpha=1&beta=5");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(res->get_header_value("Content-Type") == "application/json");
  CHECK(res->body == handle_solve({{"m", "20"}, {"n", "20"}, {"k", "2"}, {"alpha", "1"}, {"beta", "5"}}).body);

  const auto bad = cli.Get("/api/solve?m=0&n=1&k=1");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  CHECK(json::parse(bad->body).at("field") == "m");
  CHECK(bad->get_header_value("Access-Control-Allow-Origin") == "*");

  const auto frontier = cli.Get("/api/frontier?m=10&n=10&k=1.5");
  REQUIRE(frontier);
  CHECK(frontier->status == 200);
  CHECK(frontier->body == handle_frontier({{"m", "10"}, {"n", "10"}, {"k", "1.5"}}).body);

  const auto svg = cli.Get("/api/path.svg?m=8&n=8&k=2");
  REQUIRE(svg);
  CHECK(svg->get_header_value("Content-Type") == "image/svg+xml");

  const auto limit = cli.Get("/api/oracle?m=6&n=6&k=1");
  REQUIRE(limit);
  CHECK(limit->status == 422);

  const auto health = cli.Get("/api/health");
  REQUIRE(health);
  CHECK(health->status == 200);

  const auto pre = cli.Options("/api/solve");
  REQUIRE(pre);
  CHECK(pre->status == 204);
  CHECK(pre->get_header_value("Access-Control-Allow-Methods").find("GET") != std::string::npos);
}

TEST_CASE("concurrent requests are independent") {
  LiveServer live;
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] {
      auto cli = live.client();
      const std::string m = std::to_string(10 + i);
      const auto r = cli.Get(("/api/solve?m=" + m + "&n=10&k=2").c_str());
      ok[i] = r && r->status == 200 && r->body == handle_solve({{"m", m}, {"n", "10"}, {"k", "2"}}).body;
    });
  }
  for (auto& t : threads) t.join();
  CHECK(std::count(ok.begin(), ok.end(), 1) == 8);
}
