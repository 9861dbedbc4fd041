// cppg: covering paths on a grid.
//   cppg solve --m 40 --n 40 --k 3 --alpha 1 --beta 1
//   cppg frontier --m 10 --n 10 --k 3/2
//   cppg verify --path p.json --k 2
//   cppg oracle --m 3 --n 2 --k 1
//   cppg svg --m 20 --n 20 --k 2 --out route.svg
//   cppg serve --port 8080

#include "cppg/http_server.hpp"
#include "cppg/service.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Inputs {
  std::string m, n, k, alpha, beta, min, samples, max_stops;
  bool relaxed = false;
  bool coverage = false;
};

void add_grid(CLI::App* app, Inputs& in) {
  app->add_option("--m", in.m, "taller side")->required();
  app->add_option("--n", in.n, "shorter side")->required();
  app->add_option("--k", in.k, "coverage radius, e.g. 2, 3/2 or 1.5")->required();
}

void add_objective(CLI::App* app, Inputs& in) {
  app->add_option("--alpha", in.alpha, "weight on path length");
  app->add_option("--beta", in.beta, "weight on stop count");
  app->add_option("--min", in.min, "single objective: length or stops");
  app->add_flag("--relaxed", in.relaxed, "continuous stops (bound comparison only)");
}

cppg::Params params(const Inputs& in) {
  cppg::Params p;
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) p[key] = v;
  };
  put("m", in.m);
  put("n", in.n);
  put("k", in.k);
  put("alpha", in.alpha);
  put("beta", in.beta);
  put("min", in.min);
  put("samples", in.samples);
  put("max_stops", in.max_stops);
  if (in.relaxed) p["relaxed"] = "true";
  if (in.coverage) p["coverage"] = "true";
  return p;
}

cppg::HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering paths on a grid"};
  app.require_subcommand(1);
  Inputs in;
  std::string path_file, out_file;
  cppg::ServerOptions server;

  auto* solve = app.add_subcommand("solve", "solve one instance, print the solution JSON");
  add_grid(solve, in);
  add_objective(solve, in);

  auto* frontier = app.add_subcommand("frontier", "lower/upper curves and constructed points");
  add_grid(frontier, in);
  frontier->add_option("--samples", in.samples, "gamma samples per segment (>= 2)");

  auto* verify = app.add_subcommand("verify", "check coverage and the trade-off bound of a path file");
  verify->add_option("--path", path_file, "path or solution JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--k", in.k, "coverage radius")->required();
  verify->add_option("--m", in.m, "taller side (if not in the file)");
  verify->add_option("--n", in.n, "shorter side (if not in the file)");
  verify->add_flag("--relaxed", in.relaxed, "continuous stops");

  auto* oracle = app.add_subcommand("oracle", "exact Pareto frontier of a tiny instance");
  add_grid(oracle, in);
  oracle->add_option("--max-stops", in.max_stops, "largest stop count to enumerate");

  auto* svg = app.add_subcommand("svg", "render the solved path as SVG");
  add_grid(svg, in);
  add_objective(svg, in);
  svg->add_option("--out", out_file, "output file (stdout if omitted)");
  svg->add_flag("--coverage", in.coverage, "draw coverage diamonds");

  auto* serve = app.add_subcommand("serve", "run the HTTP API");
  serve->add_option("--host", server.host, "bind address");
  serve->add_option("--port", server.port, "port (0 picks one)");
  serve->add_option("--workers", server.workers, "worker threads")->check(CLI::Range(1, 256));
  serve->add_option("--cors-origin", server.cors_origin, "Access-Control-Allow-Origin value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  cppg::Response r;
  try {
    const cppg::Params p = params(in);
    if (*solve) {
      r = cppg::handle_solve(p);
    } else if (*frontier) {
      r = cppg::handle_frontier(p);
    } else if (*verify) {
      std::ifstream f(path_file);
      std::stringstream ss;
      ss << f.rdbuf();
      r = cppg::handle_verify(ss.str(), p);
    } else if (*oracle) {
      r = cppg::handle_oracle(p);
    } else if (*svg) {
      r = cppg::handle_svg(p);
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        out << r.body;
        if (!out) throw std::runtime_error("cannot write " + out_file);
        return 0;
      }
    } else if (*serve) {
      cppg::HttpServer http(server);
      const int port = http.bind();
      std::cerr << "listening on " << server.host << ":" << port << "\n";
      g_server = &http;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      http.listen();
      g_server = nullptr;
      return 0;
    }
  } catch (const cppg::RequestError& e) {
    std::cerr << "error: " << e.what() << " (" << e.field() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << r.body;
  if (r.content_type == "application/json") std::cout << "\n";
  return 0;
}
