#include "cppg/http_server.hpp"

#include <httplib.h>

namespace cppg {

struct HttpServer::Impl {
  ServerOptions opt;
  httplib::Server server;
  bool bound = false;
};

namespace {

Params to_params(const httplib::Request& req) {
  Params p;
  for (const auto& [key, value] : req.params) p[key] = value;  // last value wins
  return p;
}

}  // namespace

HttpServer::HttpServer(ServerOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->opt = std::move(options);
  auto& srv = impl_->server;
  const int workers = std::max(1, impl_->opt.workers);
  srv.new_task_queue = [workers] { return new httplib::ThreadPool(static_cast<size_t>(workers)); };

  const std::string origin = impl_->opt.cors_origin;
  const ServiceLimits limits = impl_->opt.limits;
  auto route = [&srv, origin, limits](const std::string& path, Response (*handler)(const Params&, const ServiceLimits&)) {
    srv.Get(path, [origin, limits, handler](const httplib::Request& req, httplib::Response& res) {
      Response r;
      try {
        r = handler(to_params(req), limits);
      } catch (const std::exception& e) {
        r = error_response(e);
      }
      res.status = r.status;
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_content(r.body, r.content_type);
    });
  };
  route("/api/solve", &handle_solve);
  route("/api/frontier", &handle_frontier);
  route("/api/path.svg", &handle_svg);
  route("/api/oracle", &handle_oracle);

  srv.Get("/api/health", [origin](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_content(R"({"status":"ok"})", "application/json");
  });
  srv.Options(R"(/api/.*)", [origin](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  auto& s = impl_->server;
  int port = impl_->opt.port;
  if (port == 0) {
    port = s.bind_to_any_port(impl_->opt.host);
  } else if (!s.bind_to_port(impl_->opt.host, port)) {
    port = -1;
  }
  if (port < 0) throw std::runtime_error("cannot bind " + impl_->opt.host + ":" + std::to_string(impl_->opt.port));
  impl_->bound = true;
  return port;
}

void HttpServer::listen() {
  if (!impl_->bound) bind();
  impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace cppg
