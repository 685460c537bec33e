#include "afscope/service.hpp"

#include <deque>
#include <future>
#include <list>
#include <mutex>
#include <random>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include <httplib.h>

#include "afscope/error.hpp"
#include "afscope/formats.hpp"
#include "afscope/json_output.hpp"
#include "afscope/views.hpp"

namespace afscope::service {
namespace {

// Raised inside handlers for protocol-level failures.
struct HttpError {
  int status;
  std::string code;
  std::string message;
};

constexpr std::size_t kRetiredMemory = 4096;

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < path.size()) {
    if (path[i] == '/') {
      ++i;
      continue;
    }
    std::size_t j = path.find('/', i);
    if (j == std::string_view::npos) j = path.size();
    out.push_back(path.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> to_size(std::string_view text) {
  if (text.empty() || text.size() > 12) return std::nullopt;
  std::size_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

const std::string* param(const Request& r, const std::string& name) {
  auto it = r.params.find(name);
  return it == r.params.end() ? nullptr : &it->second;
}

std::optional<std::size_t> size_param(const Request& r, const std::string& name) {
  const std::string* text = param(r, name);
  if (!text) return std::nullopt;
  auto v = to_size(*text);
  if (!v) throw HttpError{400, "bad_parameter", name + " must be a non-negative integer"};
  return v;
}

Semantics semantics_param(const Request& r, Semantics fallback) {
  const std::string* text = param(r, "semantics");
  if (!text) return fallback;
  auto s = semantics_from_string(*text);
  if (!s)
    throw HttpError{400, "bad_parameter",
                    "unknown semantics '" + *text + "' (grounded|complete|stable|preferred)"};
  return *s;
}

std::optional<Format> format_for_upload(const Request& r) {
  if (const std::string* name = param(r, "format")) {
    auto f = format_from_name(*name);
    if (!f) throw HttpError{400, "unsupported_format", "unknown format '" + *name + "'"};
    return f;
  }
  std::string_view type = r.content_type;
  type = type.substr(0, type.find(';'));
  while (!type.empty() && type.back() == ' ') type.remove_suffix(1);
  if (type == "application/json") return Format::kJson;
  if (type == "text/x-apx" || type == "application/x-apx" || type == "text/plain")
    return Format::kApx;
  if (type == "text/x-tgf" || type == "application/x-tgf") return Format::kTgf;
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> parse_suspend_body(const std::string& body) {
  json::Json doc;
  try {
    doc = json::Json::parse(body);
  } catch (const json::Json::parse_error& e) {
    throw HttpError{400, "parse_error", std::string("malformed JSON body: ") + e.what()};
  }
  const char* shape = R"(body must be {"suspend":[["x","y"],...]})";
  if (!doc.is_object() || !doc.contains("suspend") || !doc["suspend"].is_array())
    throw HttpError{400, "invalid_input", shape};
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& pair : doc["suspend"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw HttpError{400, "invalid_input", shape};
    out.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return out;
}

Response error_from(std::exception_ptr error) {
  try {
    std::rethrow_exception(error);
  } catch (const HttpError& e) {
    return error_response(e.status, e.code, e.message);
  } catch (const LimitError& e) {
    return error_response(413, "limit_exceeded", e.what());
  } catch (const ParseError& e) {
    return error_response(400, "parse_error", e.what());
  } catch (const OutOfRange& e) {
    return error_response(404, "out_of_range", e.what());
  } catch (const InvalidInput& e) {
    return error_response(400, "invalid_input", e.what());
  } catch (const Cancelled& e) {
    return error_response(503, "cancelled", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

}  // namespace

Response error_response(int status, std::string_view code, std::string_view message) {
  json::Json doc;
  doc["code"] = code;
  doc["message"] = message;
  Response r;
  r.status = status;
  r.body = json::dump(doc);
  return r;
}

struct Session {
  std::string id;
  std::shared_ptr<const Framework> framework;
  Api::Clock::time_point created_at;

  std::mutex cache_mutex;
  std::unordered_map<std::string, std::shared_future<std::string>> cache;
};

struct Api::State {
  Config config;
  std::function<Clock::time_point()> now;

  mutable std::mutex mutex;
  // Most recently used first.
  std::list<std::shared_ptr<Session>> lru;
  std::unordered_map<std::string, std::list<std::shared_ptr<Session>>::iterator> sessions;
  std::deque<std::string> retired_order;
  std::unordered_set<std::string> retired;
  std::mt19937_64 rng{std::random_device{}()};

  std::atomic<std::size_t> cancelled{0};

  void retire_locked(const std::string& id) {
    retired.insert(id);
    retired_order.push_back(id);
    if (retired_order.size() > kRetiredMemory) {
      retired.erase(retired_order.front());
      retired_order.pop_front();
    }
  }

  std::string fresh_id_locked() {
    static constexpr char kHex[] = "0123456789abcdef";
    for (;;) {
      std::string id;
      for (int word = 0; word < 2; ++word) {
        std::uint64_t bits = rng();
        for (int i = 0; i < 16; ++i, bits >>= 4) id += kHex[bits & 0xF];
      }
      if (!sessions.count(id) && !retired.count(id)) return id;
    }
  }

  std::string add(std::shared_ptr<const Framework> framework) {
    std::lock_guard lock(mutex);
    const auto t = now();
    for (auto it = lru.begin(); it != lru.end();) {
      if (t - (*it)->created_at > config.ttl) {
        sessions.erase((*it)->id);
        retire_locked((*it)->id);
        it = lru.erase(it);
      } else {
        ++it;
      }
    }
    auto session = std::make_shared<Session>();
    session->id = fresh_id_locked();
    session->framework = std::move(framework);
    session->created_at = t;
    lru.push_front(session);
    sessions[session->id] = lru.begin();
    while (lru.size() > config.max_sessions) {
      const std::string victim = lru.back()->id;
      sessions.erase(victim);
      lru.pop_back();
      retire_locked(victim);
    }
    return session->id;
  }

  std::shared_ptr<Session> find(const std::string& id) {
    std::lock_guard lock(mutex);
    auto it = sessions.find(id);
    if (it == sessions.end()) {
      if (retired.count(id))
        throw HttpError{410, "gone", "session " + id + " expired or was evicted"};
      throw HttpError{404, "not_found", "no session " + id};
    }
    auto session = *it->second;
    if (now() - session->created_at > config.ttl) {
      lru.erase(it->second);
      sessions.erase(it);
      retire_locked(id);
      throw HttpError{410, "gone", "session " + id + " expired or was evicted"};
    }
    lru.splice(lru.begin(), lru, it->second);
    return session;
  }

  // At-most-once computation per (session, key). Waiters share the
  // owner's result; a failed computation is forgotten so it can be retried.
  std::string memo(Session& session, const std::string& key,
                   const std::function<std::string()>& compute) {
    if (!config.cache) return compute();
    for (;;) {
      std::promise<std::string> promise;
      std::shared_future<std::string> result;
      bool owner = false;
      {
        std::lock_guard lock(session.cache_mutex);
        auto it = session.cache.find(key);
        if (it == session.cache.end()) {
          result = promise.get_future().share();
          session.cache.emplace(key, result);
          owner = true;
        } else {
          result = it->second;
        }
      }
      if (owner) {
        try {
          std::string body = compute();
          promise.set_value(body);
          return body;
        } catch (...) {
          {
            std::lock_guard lock(session.cache_mutex);
            session.cache.erase(key);
          }
          promise.set_exception(std::current_exception());
          throw;
        }
      }
      try {
        return result.get();
      } catch (const Cancelled&) {
        // The owner's client went away; compute on our own behalf.
      }
    }
  }

  ExplainOptions explain_options(const Request& r) const {
    ExplainOptions opts;
    opts.semantics = semantics_param(r, Semantics::kStable);
    opts.bounds = config.bounds;
    opts.limits = config.limits;
    if (const std::string* c = param(r, "candidates")) {
      auto mode = candidate_mode_from_string(*c);
      if (!mode)
        throw HttpError{400, "bad_parameter", "candidates must be failing or all-undec"};
      opts.candidates = *mode;
    }
    if (auto v = size_param(r, "maxDelta")) opts.bounds.max_cardinality = *v;
    if (auto v = size_param(r, "maxTests")) {
      if (*v > config.max_tests_cap)
        throw HttpError{400, "bad_parameter",
                        "maxTests exceeds " + std::to_string(config.max_tests_cap)};
      opts.bounds.max_tests = *v;
    }
    if (auto v = size_param(r, "maxResults")) {
      if (*v > config.max_results_cap)
        throw HttpError{400, "bad_parameter",
                        "maxResults exceeds " + std::to_string(config.max_results_cap)};
      opts.bounds.max_results = *v;
    }
    return opts;
  }

  static std::string options_key(const ExplainOptions& o) {
    return std::string(to_string(o.semantics)) + "/" + std::string(to_string(o.candidates)) +
           "/" + std::to_string(o.bounds.max_cardinality) + "/" +
           std::to_string(o.bounds.max_tests) + "/" + std::to_string(o.bounds.max_results);
  }

  // View for ?solution=&delta= on top of the session's framework.
  View selected_view(Session& session, const Request& r) {
    const Framework& fw = *session.framework;
    auto solution = size_param(r, "solution");
    auto delta = size_param(r, "delta");
    if (!solution) {
      if (delta) throw HttpError{400, "bad_parameter", "delta requires solution"};
      return base_view(fw);
    }
    auto opts = explain_options(r);
    if (!delta) {
      Explanation e;
      e.solution_index = *solution;
      auto target = afscope::solution(fw, opts.semantics, *solution, opts.limits);
      e.overlay = build_overlay(grounded(fw), target);
      return solution_view(fw, e, std::nullopt);
    }
    return solution_view(fw, explain(fw, *solution, opts), delta);
  }

  Response route(const Request& r) {
    auto parts = split_path(r.path);
    auto method_is = [&](std::string_view m) {
      if (r.method != m) throw HttpError{405, "method_not_allowed", r.method + " " + r.path};
    };
    if (parts.size() == 1 && parts[0] == "healthz") {
      method_is("GET");
      Response ok;
      ok.content_type = "text/plain";
      ok.body = "ok";
      return ok;
    }
    if (parts.empty() || parts[0] != "frameworks")
      throw HttpError{404, "not_found", "no route for " + r.path};

    if (parts.size() == 1) {
      method_is("POST");
      return create(r);
    }
    auto session = find(std::string(parts[1]));
    const Framework& fw = *session->framework;
    const std::string_view what = parts.size() > 2 ? parts[2] : "";
    Response out;

    if (parts.size() == 3 && what == "grounded") {
      method_is("GET");
      out.body = memo(*session, "grounded", [&] { return json::dump(json::grounded(fw, grounded(fw))); });
      return out;
    }
    if (parts.size() == 3 && what == "solutions") {
      method_is("GET");
      auto sem = semantics_param(r, Semantics::kStable);
      out.body = memo(*session, "solutions/" + std::string(to_string(sem)), [&] {
        return json::dump(json::solutions(fw, enumerate(fw, sem, config.limits)));
      });
      return out;
    }
    if (parts.size() == 5 && what == "solutions" && parts[4] == "explanation") {
      method_is("GET");
      auto index = to_size(parts[3]);
      if (!index) throw HttpError{404, "not_found", "bad solution index"};
      auto opts = explain_options(r);
      // Validate up front so errors get a proper status before streaming.
      auto target = afscope::solution(fw, opts.semantics, *index, opts.limits);
      if (!target.is_total())
        throw HttpError{400, "invalid_input", "solution is not 2-valued; only stable solutions can be explained"};
      std::string key = "explanation/" + std::to_string(*index) + "/" + options_key(opts);
      out.deferred = [this, session, key, index = *index, opts](const CancelCheck& cancelled) {
        try {
          return memo(*session, key, [&] {
            const Framework& f = *session->framework;
            return json::dump(json::explanation(f, explain(f, index, opts, cancelled)));
          });
        } catch (const Cancelled&) {
          ++this->cancelled;
          throw;
        }
      };
      return out;
    }
    if (parts.size() == 3 && what == "what-if") {
      method_is("POST");
      auto names = parse_suspend_body(r.body);
      auto edges = resolve_attacks(fw, names);
      out.body = what_if_view(fw, edges).layout_json(fw);
      return out;
    }
    if (parts.size() == 3 && what == "layout") {
      method_is("GET");
      out.body = memo(*session, "layout?" + view_key(r), [&] {
        return selected_view(*session, r).layout_json(fw);
      });
      return out;
    }
    if (parts.size() == 3 && what == "export") {
      method_is("GET");
      const std::string* name = param(r, "format");
      if (!name) throw HttpError{400, "bad_parameter", "format is required (apx|tgf|json|dot)"};
      if (*name == "dot") {
        out.content_type = "text/vnd.graphviz";
        out.body = memo(*session, "dot?" + view_key(r),
                        [&] { return selected_view(*session, r).dot(fw); });
        return out;
      }
      auto format = format_from_name(*name);
      if (!format) throw HttpError{400, "unsupported_format", "cannot export as '" + *name + "'"};
      out.content_type = *format == Format::kJson ? "application/json" : "text/plain";
      out.body = serialize(fw, *format);
      return out;
    }
    throw HttpError{404, "not_found", "no route for " + r.path};
  }

  // Canonical key over the parameters that shape a view.
  std::string view_key(const Request& r) const {
    std::string key;
    for (const char* name : {"solution", "delta", "semantics", "candidates", "maxDelta",
                             "maxTests", "maxResults"}) {
      key += name;
      key += '=';
      if (const std::string* v = param(r, name)) key += *v;
      key += '&';
    }
    return key;
  }

  Response create(const Request& r) {
    if (r.body.size() > config.max_body_bytes)
      throw HttpError{413, "limit_exceeded", "request body exceeds " +
                                                 std::to_string(config.max_body_bytes) + " bytes"};
    auto format = format_for_upload(r);
    if (!format)
      throw HttpError{400, "unsupported_format",
                      "set ?format=apx|tgf|json or a Content-Type of application/json, "
                      "text/x-apx or text/x-tgf"};
    auto fw = std::make_shared<const Framework>(parse(r.body, *format));
    json::Json doc;
    doc["id"] = add(std::move(fw));
    Response out;
    out.status = 201;
    out.body = json::dump(doc);
    return out;
  }
};

Api::Api(Config config, std::function<Clock::time_point()> now)
    : state_(std::make_unique<State>()) {
  state_->config = std::move(config);
  state_->now = std::move(now);
}

Api::~Api() = default;

Response Api::handle(const Request& request) {
  try {
    return state_->route(request);
  } catch (...) {
    return error_from(std::current_exception());
  }
}

Response Api::resolve(Response response, const CancelCheck& cancelled) {
  if (!response.deferred) return response;
  try {
    response.body = response.deferred(cancelled);
    response.deferred = nullptr;
    return response;
  } catch (...) {
    return error_from(std::current_exception());
  }
}

const Config& Api::config() const { return state_->config; }

std::size_t Api::session_count() const {
  std::lock_guard lock(state_->mutex);
  return state_->sessions.size();
}

std::size_t Api::cancelled_searches() const { return state_->cancelled.load(); }

struct Server::Impl {
  explicit Impl(Config config) : api(std::move(config)) {}

  Api api;
  httplib::Server http;

  bool allowed_origin(const std::string& origin) const {
    for (const auto& o : api.config().cors_origins)
      if (o == origin) return true;
    return false;
  }

  void apply_cors(const httplib::Request& req, httplib::Response& res) const {
    std::string origin = req.get_header_value("Origin");
    if (!origin.empty() && allowed_origin(origin)) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Vary", "Origin");
    }
  }

  void serve(const httplib::Request& req, httplib::Response& res) {
    Request r;
    r.method = req.method;
    r.path = req.path;
    for (const auto& [k, v] : req.params) r.params.emplace(k, v);
    r.body = req.body;
    r.content_type = req.get_header_value("Content-Type");

    Response out = api.handle(r);
    apply_cors(req, res);
    res.status = out.status;
    if (!out.deferred) {
      res.set_content(out.body, out.content_type);
      return;
    }
    auto deferred = std::move(out.deferred);
    res.set_chunked_content_provider(
        out.content_type, [deferred](std::size_t, httplib::DataSink& sink) {
          try {
            std::string body = deferred([&sink] { return !sink.is_writable(); });
            sink.write(body.data(), body.size());
            sink.done();
            return true;
          } catch (...) {
            // Headers are already out; dropping the connection is the only
            // signal left.
            return false;
          }
        });
  }

  void install() {
    auto handler = [this](const httplib::Request& req, httplib::Response& res) { serve(req, res); };
    http.Get(".*", handler);
    http.Post(".*", handler);
    http.Put(".*", handler);
    http.Delete(".*", handler);
    http.Patch(".*", handler);
    http.Options(".*", [this](const httplib::Request& req, httplib::Response& res) {
      std::string origin = req.get_header_value("Origin");
      if (origin.empty() || !allowed_origin(origin)) {
        auto err = error_response(403, "forbidden", "origin not allowed");
        res.status = err.status;
        res.set_content(err.body, err.content_type);
        return;
      }
      apply_cors(req, res);
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.status = 204;
    });
    // SO_REUSEADDR only: httplib's default SO_REUSEPORT would let a second
    // server share the port instead of failing to start.
    http.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });
    http.set_payload_max_length(api.config().max_body_bytes);
    http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (!res.body.empty()) return;
      auto err = error_response(res.status, res.status == 413 ? "limit_exceeded" : "http_error",
                                httplib::status_message(res.status));
      res.set_content(err.body, err.content_type);
    });
  }
};

Server::Server(Config config) : impl_(std::make_unique<Impl>(std::move(config))) {
  impl_->install();
}

Server::~Server() {
  if (impl_->http.is_running()) impl_->http.stop();
}

int Server::bind(const std::string& host, int port) {
  if (port < 0 || port > 65535) throw Error("invalid port " + std::to_string(port));
  if (port == 0) {
    int bound = impl_->http.bind_to_any_port(host);
    if (bound <= 0) throw Error("cannot bind " + host);
    return bound;
  }
  if (!impl_->http.bind_to_port(host, port))
    throw Error("cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

bool Server::running() const { return impl_->http.is_running(); }

Api& Server::api() { return impl_->api; }

}  // namespace afscope::service
