#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "afscope/explain.hpp"
#include "afscope/semantics.hpp"

namespace afscope::service {

struct Config {
  std::size_t max_sessions = 100;
  std::chrono::seconds ttl{3600};
  /// Memoize GET bodies per session. Off only for cache-transparency checks.
  bool cache = true;
  /// Origins allowed to call the API from a browser.
  std::vector<std::string> cors_origins;
  std::size_t max_body_bytes = 8u << 20;
  /// Defaults for explanation searches; query parameters may lower or raise
  /// them up to the hard caps below.
  SearchBounds bounds;
  EnumerationLimits limits;
  std::size_t max_tests_cap = 10'000'000;
  std::size_t max_results_cap = 10'000;
};

struct Request {
  std::string method;
  /// Path without the query string, e.g. "/frameworks/ab12/grounded".
  std::string path;
  std::map<std::string, std::string> params;
  std::string body;
  std::string content_type;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  /// Set for long computations: produces the body, polling the check
  /// between units of work. Throws Cancelled when the check fires.
  std::function<std::string(const CancelCheck&)> deferred;
};

/// Transport-independent API: routing, sessions, caching and error mapping.
/// Thread-safe.
class Api {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Api(Config config = {}, std::function<Clock::time_point()> now = Clock::now);
  ~Api();
  Api(const Api&) = delete;
  Api& operator=(const Api&) = delete;

  Response handle(const Request& request);

  /// Runs `deferred` if present, turning thrown errors into error responses.
  Response resolve(Response response, const CancelCheck& cancelled = {});

  const Config& config() const;
  std::size_t session_count() const;
  /// Explanation searches aborted by their cancel check so far.
  std::size_t cancelled_searches() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// Error body shared by every non-2xx response.
Response error_response(int status, std::string_view code, std::string_view message);

/// HTTP binding of Api on top of cpp-httplib.
class Server {
 public:
  explicit Server(Config config = {});
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds without serving; port 0 picks a free port. Returns the bound
  /// port or throws Error.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  void listen();
  void stop();
  bool running() const;

  Api& api();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace afscope::service
