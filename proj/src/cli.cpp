#include "afscope/cli.hpp"

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "afscope/error.hpp"
#include "afscope/formats.hpp"
#include "afscope/json_output.hpp"
#include "afscope/service.hpp"
#include "afscope/views.hpp"

namespace afscope::cli {
namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop.store(true); }

// Usage problems found after CLI11 parsing (flag combinations, syntax of
// flag values). Exit code 2.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string input;
  std::string format;
  std::string semantics;
  std::optional<std::size_t> solution;
  std::optional<std::size_t> delta;
  std::string suspend;
  std::string candidates = "failing";
  std::size_t max_delta = SearchBounds{}.max_cardinality;
  std::size_t max_tests = SearchBounds{}.max_tests;
  std::size_t max_results = SearchBounds{}.max_results;
  std::string output_format;
  std::string out;

  std::string bind = "127.0.0.1:8080";
  std::vector<std::string> cors;
  std::size_t max_sessions = 100;
  std::size_t ttl = 3600;
  bool no_cache = false;
};

Framework load(const Options& o, std::istream& in) {
  std::optional<Format> format;
  if (!o.format.empty()) {
    format = format_from_name(o.format);
    if (!format) throw UsageError("unknown --format '" + o.format + "' (apx|tgf|json)");
  }
  std::string text;
  if (o.input == "-") {
    if (!format) throw UsageError("reading stdin requires --format");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    if (!format) format = format_from_path(o.input);
    if (!format)
      throw UsageError("cannot infer the format of '" + o.input + "'; pass --format");
    std::ifstream file(o.input, std::ios::binary);
    if (!file) throw Error("cannot read " + o.input);
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  return parse(text, *format);
}

Semantics semantics_of(const Options& o, Semantics fallback) {
  if (o.semantics.empty()) return fallback;
  auto s = semantics_from_string(o.semantics);
  if (!s)
    throw UsageError("unknown --semantics '" + o.semantics +
                     "' (grounded|complete|stable|preferred)");
  return *s;
}

ExplainOptions explain_options(const Options& o) {
  ExplainOptions opts;
  opts.semantics = semantics_of(o, Semantics::kStable);
  auto mode = candidate_mode_from_string(o.candidates);
  if (!mode) throw UsageError("--candidates must be failing or all-undec");
  opts.candidates = *mode;
  opts.bounds = {o.max_delta, o.max_tests, o.max_results};
  return opts;
}

// "a,b;c,d" -> {(a,b),(c,d)}
std::vector<std::pair<std::string, std::string>> parse_suspend(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream pairs(text);
  std::string pair;
  while (std::getline(pairs, pair, ';')) {
    auto comma = pair.find(',');
    if (comma == std::string::npos || pair.find(',', comma + 1) != std::string::npos)
      throw UsageError("--suspend expects x,y[;x,y...], got '" + pair + "'");
    std::string x = pair.substr(0, comma), y = pair.substr(comma + 1);
    if (x.empty() || y.empty()) throw UsageError("--suspend has an empty argument in '" + pair + "'");
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error("cannot write " + o.out);
  file << text;
}

void require_output(const Options& o, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed)
    if (o.output_format == a) return;
  std::string list;
  for (auto a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw UsageError("--output-format must be " + list);
}

std::string labels_text(const Framework& fw, const Labelling& l, const LengthMap* lengths) {
  std::string line;
  for (ArgIndex x = 0; x < fw.size(); ++x) {
    if (x) line += ' ';
    line += fw.id(x) + "=" + std::string(to_string(l[x]));
    if (lengths && (*lengths)[x].is_finite())
      line += "(" + std::to_string((*lengths)[x].value()) + ")";
  }
  return line;
}

std::string edges_text(const Framework& fw, const std::vector<AttackIndex>& edges) {
  std::string s = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& a = fw.attacks()[edges[i]];
    if (i) s += ", ";
    s += "(" + fw.id(a.source) + "," + fw.id(a.target) + ")";
  }
  return s + "}";
}

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  auto fw = load(o, in);
  emit(o, out,
       "ok: " + std::to_string(fw.size()) + " arguments, " + std::to_string(fw.attacks().size()) +
           " attacks\n");
  return kOk;
}

int cmd_solve(const Options& o, std::istream& in, std::ostream& out) {
  auto sem = semantics_of(o, Semantics::kGrounded);
  require_output(o, {"json", "text"});
  auto fw = load(o, in);
  auto set = enumerate(fw, sem);
  std::optional<GroundedResult> g;
  if (sem == Semantics::kGrounded) g = grounded(fw);
  if (o.output_format == "json") {
    auto doc = json::solutions(fw, set);
    if (g) doc["lengths"] = json::lengths(fw, g->lengths);
    emit(o, out, json::dump(doc));
    return kOk;
  }
  std::string text = std::string(to_string(sem)) + ": " + std::to_string(set.solutions.size()) +
                     " solution" + (set.solutions.size() == 1 ? "" : "s") +
                     (set.truncated ? " (truncated)" : "") + "\n";
  for (std::size_t i = 0; i < set.solutions.size(); ++i)
    text += std::to_string(i) + ": " +
            labels_text(fw, set.solutions[i], g ? &g->lengths : nullptr) + "\n";
  emit(o, out, text);
  return kOk;
}

int cmd_explain(const Options& o, std::istream& in, std::ostream& out) {
  auto opts = explain_options(o);
  require_output(o, {"json", "text"});
  auto fw = load(o, in);
  auto e = explain(fw, o.solution.value_or(0), opts);
  if (o.output_format == "json") {
    emit(o, out, json::dump(json::explanation(fw, e)));
    return kOk;
  }
  std::string text = "solution " + std::to_string(e.solution_index) + ": " +
                     labels_text(fw, e.overlay.effective_labels, nullptr) + "\n";
  text += "resolved:";
  for (ArgIndex x : e.overlay.resolved) text += " " + fw.id(x);
  text += "\ncritical sets" + std::string(e.truncated ? " (truncated)" : "") + ":\n";
  for (const auto& set : e.critical_sets) text += "  " + edges_text(fw, set.edges) + "\n";
  emit(o, out, text);
  return kOk;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  require_output(o, {"dot", "json"});
  if (!o.suspend.empty() && o.solution)
    throw UsageError("--suspend and --solution are mutually exclusive");
  if (o.delta && !o.solution) throw UsageError("--delta requires --solution");
  auto opts = explain_options(o);
  auto suspend = parse_suspend(o.suspend);
  auto fw = load(o, in);

  View view;
  if (o.solution) {
    auto e = explain(fw, *o.solution, opts);
    std::optional<std::size_t> delta = o.delta.value_or(0);
    if (!o.delta && e.critical_sets.empty()) {
      err << "note: no critical attack set found within the bounds; drawing the overlay only\n";
      delta.reset();
    }
    view = solution_view(fw, e, delta);
  } else if (!o.suspend.empty()) {
    view = what_if_view(fw, resolve_attacks(fw, suspend));
  } else {
    view = base_view(fw);
  }
  emit(o, out, o.output_format == "dot" ? view.dot(fw) : view.layout_json(fw));
  return kOk;
}

int cmd_serve(const Options& o, std::ostream& out, const Hooks& hooks) {
  auto colon = o.bind.rfind(':');
  if (colon == std::string::npos) throw UsageError("--bind expects host:port");
  std::string host = o.bind.substr(0, colon);
  std::string port_text = o.bind.substr(colon + 1);
  int port = -1;
  if (!port_text.empty() && port_text.size() <= 5 &&
      port_text.find_first_not_of("0123456789") == std::string::npos)
    port = std::stoi(port_text);
  if (host.empty() || port < 0 || port > 65535)
    throw UsageError("invalid --bind '" + o.bind + "'; expected host:port with port 0-65535");

  service::Config config;
  config.max_sessions = o.max_sessions;
  config.ttl = std::chrono::seconds(o.ttl);
  config.cache = !o.no_cache;
  config.cors_origins = o.cors;
  service::Server server(config);
  int bound = server.bind(host, port);

  g_stop.store(false);
  auto previous_int = std::signal(SIGINT, on_signal);
  auto previous_term = std::signal(SIGTERM, on_signal);
  std::thread watcher([&] {
    while (!g_stop.load()) std::this_thread::sleep_for(std::chrono::milliseconds(50));
    server.stop();
  });
  out << "listening on " << host << ":" << bound << std::endl;
  if (hooks.on_listening) hooks.on_listening(bound);
  server.listen();
  g_stop.store(true);
  watcher.join();
  std::signal(SIGINT, previous_int);
  std::signal(SIGTERM, previous_term);
  return kOk;
}

}  // namespace

void request_stop() noexcept { g_stop.store(true); }

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Explore abstract argumentation frameworks: grounded layering, "
               "solutions, critical attack sets and renderings."};
  app.name("afscope");
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Framework file (.apx, .tgf, .json) or - for stdin")
        ->required();
    sub->add_option("--format", o.format, "Input format: apx, tgf or json");
    sub->add_option("--out", o.out, "Write to this file instead of stdout");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--candidates", o.candidates, "Suspension candidates: failing or all-undec");
    sub->add_option("--max-delta", o.max_delta, "Largest critical set size searched");
    sub->add_option("--max-tests", o.max_tests, "Budget of subset recomputations");
    sub->add_option("--max-results", o.max_results, "Stop after this many critical sets");
  };

  auto* validate = app.add_subcommand("validate", "Parse a framework and report its size");
  add_input(validate);

  auto* solve = app.add_subcommand("solve", "Enumerate the solutions of a semantics");
  add_input(solve);
  solve->add_option("--semantics", o.semantics, "grounded (default), complete, stable, preferred");
  solve->add_option("--output-format", o.output_format, "json (default) or text");

  auto* explain_cmd = app.add_subcommand("explain", "Critical attack sets of one solution");
  add_input(explain_cmd);
  add_search(explain_cmd);
  explain_cmd->add_option("--semantics", o.semantics, "stable (default) or another semantics");
  explain_cmd->add_option("--solution", o.solution, "Solution index (default 0)");
  explain_cmd->add_option("--output-format", o.output_format, "json (default) or text");

  auto* render = app.add_subcommand("render", "Layered drawing as DOT or layout JSON");
  add_input(render);
  add_search(render);
  render->add_option("--semantics", o.semantics, "Semantics of --solution (default stable)");
  render->add_option("--solution", o.solution, "Overlay this solution on the grounded layering");
  render->add_option("--delta", o.delta, "Critical set drawn with the overlay (default 0)");
  render->add_option("--suspend", o.suspend, "What-if suspension: x,y[;x,y...]");
  render->add_option("--output-format", o.output_format, "dot (default) or json");

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--bind", o.bind, "host:port (default 127.0.0.1:8080)");
  serve->add_option("--cors", o.cors, "Allowed browser origin (repeatable)");
  serve->add_option("--max-sessions", o.max_sessions, "Sessions kept before LRU eviction");
  serve->add_option("--ttl", o.ttl, "Session lifetime in seconds");
  serve->add_flag("--no-cache", o.no_cache, "Recompute every response");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, in, out);
    if (solve->parsed()) {
      if (o.output_format.empty()) o.output_format = "json";
      return cmd_solve(o, in, out);
    }
    if (explain_cmd->parsed()) {
      if (o.output_format.empty()) o.output_format = "json";
      return cmd_explain(o, in, out);
    }
    if (render->parsed()) {
      if (o.output_format.empty()) o.output_format = "dot";
      return cmd_render(o, in, out, err);
    }
    return cmd_serve(o, out, hooks);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace afscope::cli
