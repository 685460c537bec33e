#include "afscope/formats.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "afscope/error.hpp"

namespace afscope {
namespace {

using ordered_json = nlohmann::ordered_json;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string flatten_label(std::string_view text) {
  std::string out(text);
  for (char& c : out)
    if (c == '\n' || c == '\r') c = ' ';
  return std::string(trim(out));
}

// Rethrows builder failures with the position of the offending statement.
template <typename Fn>
auto at_position(std::size_t line, std::size_t column, Fn&& fn) {
  try {
    return fn();
  } catch (const LimitError& e) {
    throw LimitError(e.detail(), line, column);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what(), line, column);
  }
}

class ApxLexer {
 public:
  explicit ApxLexer(std::string_view text) : text_(text) {}

  struct Token {
    enum Kind { kName, kPunct, kEnd } kind;
    std::string_view text;
    std::size_t line;
    std::size_t column;
  };

  Token next() {
    skip_blank();
    Token tok{Token::kEnd, {}, line_, column_};
    if (pos_ >= text_.size()) return tok;
    char c = text_[pos_];
    if (c == '(' || c == ')' || c == ',' || c == '.') {
      tok.kind = Token::kPunct;
      tok.text = text_.substr(pos_, 1);
      advance();
      return tok;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) advance();
    tok.kind = Token::kName;
    tok.text = text_.substr(start, pos_ - start);
    return tok;
  }

 private:
  static bool is_delimiter(char c) {
    return is_space(c) || c == '(' || c == ')' || c == ',' || c == '.';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (is_space(c)) {
        advance();
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string describe(const ApxLexer::Token& tok) {
  if (tok.kind == ApxLexer::Token::kEnd) return "end of input";
  return "`" + std::string(tok.text) + "`";
}

void expect_punct(ApxLexer& lex, char punct) {
  auto tok = lex.next();
  if (tok.kind != ApxLexer::Token::kPunct || tok.text[0] != punct)
    throw ParseError(std::string("expected `") + punct + "`, found " + describe(tok), tok.line,
                     tok.column);
}

std::string_view expect_name(ApxLexer& lex) {
  auto tok = lex.next();
  if (tok.kind != ApxLexer::Token::kName)
    throw ParseError("expected argument name, found " + describe(tok), tok.line, tok.column);
  return tok.text;
}

// Converts a byte offset into a 1-based (line, column).
std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what, 0);
}

const ordered_json& require_array(const ordered_json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) schema_error(key, "missing");
  if (!it->is_array()) schema_error(key, "expected array");
  return *it;
}

}  // namespace

std::string_view to_string(Format format) noexcept {
  switch (format) {
    case Format::kApx:
      return "apx";
    case Format::kTgf:
      return "tgf";
    case Format::kJson:
      return "json";
  }
  return "apx";
}

std::optional<Format> format_from_name(std::string_view name) noexcept {
  if (name == "apx") return Format::kApx;
  if (name == "tgf") return Format::kTgf;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

std::optional<Format> format_from_path(std::string_view path) noexcept {
  auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  return format_from_name(path.substr(dot + 1));
}

Framework parse_apx(std::string_view text) {
  FrameworkBuilder builder;
  ApxLexer lex(text);
  for (;;) {
    auto head = lex.next();
    if (head.kind == ApxLexer::Token::kEnd) break;
    if (head.kind != ApxLexer::Token::kName || (head.text != "arg" && head.text != "att"))
      throw ParseError("expected `arg` or `att`, found " + describe(head), head.line,
                       head.column);
    expect_punct(lex, '(');
    if (head.text == "arg") {
      auto name = expect_name(lex);
      expect_punct(lex, ')');
      expect_punct(lex, '.');
      at_position(head.line, head.column, [&] { return builder.add_argument(std::string(name)); });
    } else {
      auto source = expect_name(lex);
      expect_punct(lex, ',');
      auto target = expect_name(lex);
      expect_punct(lex, ')');
      expect_punct(lex, '.');
      at_position(head.line, head.column,
                  [&] { return builder.add_attack(source, target); });
    }
  }
  return std::move(builder).build();
}

Framework parse_tgf(std::string_view text) {
  FrameworkBuilder builder;
  bool in_edges = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto content = trim(line);
    if (content.empty()) continue;

    if (content == "#") {
      if (in_edges) throw ParseError("second `#` separator", line_no);
      in_edges = true;
      continue;
    }
    std::size_t split = 0;
    while (split < content.size() && !is_space(content[split])) ++split;
    std::string_view first = content.substr(0, split);
    std::string_view rest = trim(content.substr(split));

    if (!in_edges) {
      std::optional<Annotation> annotation;
      if (!rest.empty()) annotation = Annotation{std::string(rest), std::nullopt};
      at_position(line_no, 0, [&] {
        return builder.add_argument(std::string(first), std::move(annotation));
      });
    } else {
      std::size_t split2 = 0;
      while (split2 < rest.size() && !is_space(rest[split2])) ++split2;
      std::string_view second = rest.substr(0, split2);
      if (second.empty()) throw ParseError("edge line needs a source and a target", line_no);
      // Anything after the target is an edge label, which frameworks do not carry.
      at_position(line_no, 0, [&] { return builder.add_attack(first, second); });
    }
  }
  if (!in_edges) throw ParseError("missing `#` separator line", line_no + 1);
  return std::move(builder).build();
}

Framework parse_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid JSON", line, column);
  }
  if (!doc.is_object()) schema_error("$", "expected object");

  FrameworkBuilder builder;
  const auto& arguments = require_array(doc, "arguments");
  for (std::size_t i = 0; i < arguments.size(); ++i) {
    const auto& entry = arguments[i];
    const std::string path = "arguments[" + std::to_string(i) + "]";
    if (!entry.is_object()) schema_error(path, "expected object");
    auto id = entry.find("id");
    if (id == entry.end() || !id->is_string()) schema_error(path + ".id", "expected string");
    std::optional<Annotation> annotation;
    if (auto ann = entry.find("annotation"); ann != entry.end() && !ann->is_null()) {
      if (!ann->is_object()) schema_error(path + ".annotation", "expected object");
      Annotation value;
      auto text_it = ann->find("text");
      if (text_it == ann->end() || !text_it->is_string())
        schema_error(path + ".annotation.text", "expected string");
      value.text = text_it->get<std::string>();
      if (auto url = ann->find("url"); url != ann->end() && !url->is_null()) {
        if (!url->is_string()) schema_error(path + ".annotation.url", "expected string");
        value.url = url->get<std::string>();
      }
      annotation = std::move(value);
    }
    try {
      builder.add_argument(id->get<std::string>(), std::move(annotation));
    } catch (const LimitError& e) {
      throw LimitError(path + ": " + e.detail(), 0);
    } catch (const InvalidInput& e) {
      schema_error(path, e.what());
    }
  }

  if (doc.contains("attacks")) {
    const auto& attacks = require_array(doc, "attacks");
    for (std::size_t i = 0; i < attacks.size(); ++i) {
      const auto& pair = attacks[i];
      const std::string path = "attacks[" + std::to_string(i) + "]";
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        schema_error(path, "expected [source, target] string pair");
      try {
        builder.add_attack(pair[0].get<std::string>(), pair[1].get<std::string>());
      } catch (const LimitError& e) {
        throw LimitError(path + ": " + e.detail(), 0);
      } catch (const InvalidInput& e) {
        schema_error(path, e.what());
      }
    }
  }
  return std::move(builder).build();
}

Framework parse(std::string_view text, Format format) {
  switch (format) {
    case Format::kApx:
      return parse_apx(text);
    case Format::kTgf:
      return parse_tgf(text);
    case Format::kJson:
      return parse_json(text);
  }
  return parse_apx(text);
}

std::string serialize(const Framework& framework, Format format) {
  std::ostringstream out;
  const auto& args = framework.arguments();
  switch (format) {
    case Format::kApx:
      for (const auto& arg : args) out << "arg(" << arg.id << ").\n";
      for (const auto& att : framework.attacks())
        out << "att(" << args[att.source].id << ',' << args[att.target].id << ").\n";
      break;
    case Format::kTgf:
      for (const auto& arg : args) {
        out << arg.id;
        if (arg.annotation) {
          auto label = flatten_label(arg.annotation->text);
          if (!label.empty()) out << ' ' << label;
        }
        out << '\n';
      }
      out << "#\n";
      for (const auto& att : framework.attacks())
        out << args[att.source].id << ' ' << args[att.target].id << '\n';
      break;
    case Format::kJson: {
      ordered_json doc;
      doc["arguments"] = ordered_json::array();
      for (const auto& arg : args) {
        ordered_json entry;
        entry["id"] = arg.id;
        if (arg.annotation) {
          entry["annotation"]["text"] = arg.annotation->text;
          if (arg.annotation->url) entry["annotation"]["url"] = *arg.annotation->url;
        }
        doc["arguments"].push_back(std::move(entry));
      }
      doc["attacks"] = ordered_json::array();
      for (const auto& att : framework.attacks())
        doc["attacks"].push_back({args[att.source].id, args[att.target].id});
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

Framework project_to_format(const Framework& framework, Format format) {
  switch (format) {
    case Format::kApx:
      return framework.without_annotations();
    case Format::kJson:
      return framework;
    case Format::kTgf: {
      FrameworkBuilder builder;
      for (const auto& arg : framework.arguments()) {
        std::optional<Annotation> annotation;
        if (arg.annotation) {
          auto label = flatten_label(arg.annotation->text);
          if (!label.empty()) annotation = Annotation{std::move(label), std::nullopt};
        }
        builder.add_argument(arg.id, std::move(annotation));
      }
      for (const auto& att : framework.attacks()) builder.add_attack(att.source, att.target);
      return std::move(builder).build();
    }
  }
  return framework;
}

}  // namespace afscope
