#pragma once

#include "cppg/service.hpp"

#include <memory>
#include <string>

namespace cppg {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;              // 0 picks a free port
  int workers = 4;              // bounded pool for request handling
  std::string cors_origin = "*";
  ServiceLimits limits;
};

/// HTTP facade: GET /api/solve, /api/frontier, /api/path.svg, /api/oracle, /api/health.
class HttpServer {
 public:
  explicit HttpServer(ServerOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds and returns the bound port; throws on failure.
  int bind();
  /// Blocks until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cppg
