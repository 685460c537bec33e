#include "afscope/framework.hpp"

#include <cctype>

#include "afscope/error.hpp"

namespace afscope {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(line == 0 ? message
                      : "line " + std::to_string(line) +
                            (column == 0 ? "" : ":" + std::to_string(column)) + ": " +
                            message),
      line_(line),
      column_(column),
      detail_(message) {}

bool is_valid_argument_id(std::string_view id) noexcept {
  if (id.empty()) return false;
  for (char c : id) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' ||
        c == '.')
      return false;
  }
  return true;
}

bool is_absolute_url(std::string_view url) noexcept {
  auto colon = url.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == url.size()) return false;
  if (!std::isalpha(static_cast<unsigned char>(url[0]))) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = url[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
      return false;
  }
  for (char c : url)
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<ArgIndex> Framework::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

ArgIndex Framework::index_of(std::string_view id) const {
  if (auto found = find(id)) return *found;
  throw InvalidInput("unknown argument `" + std::string(id) + "`");
}

std::optional<AttackIndex> Framework::find_attack(ArgIndex source, ArgIndex target) const {
  auto it = by_edge_.find(edge_key(source, target));
  if (it == by_edge_.end()) return std::nullopt;
  return it->second;
}

std::optional<AttackIndex> Framework::find_attack(std::string_view source,
                                                  std::string_view target) const {
  auto s = find(source);
  auto t = find(target);
  if (!s || !t) return std::nullopt;
  return find_attack(*s, *t);
}

Framework Framework::without_annotations() const {
  Framework copy = *this;
  for (auto& arg : copy.arguments_) arg.annotation.reset();
  return copy;
}

ArgIndex FrameworkBuilder::add_argument(std::string id, std::optional<Annotation> annotation) {
  if (!is_valid_argument_id(id)) throw InvalidInput("invalid argument id `" + id + "`");
  if (fw_.by_id_.count(id)) throw InvalidInput("duplicate argument `" + id + "`");
  if (fw_.arguments_.size() >= Framework::kMaxArguments)
    throw LimitError("more than " + std::to_string(Framework::kMaxArguments) + " arguments",
                     0);
  if (annotation) {
    if (annotation->url && !is_absolute_url(*annotation->url))
      throw InvalidInput("annotation url of `" + id + "` is not an absolute URL");
    if (annotation->text.empty() && !annotation->url)
      throw InvalidInput("annotation of `" + id + "` has neither text nor url");
  }
  auto index = static_cast<ArgIndex>(fw_.arguments_.size());
  fw_.by_id_.emplace(id, index);
  fw_.arguments_.push_back({std::move(id), std::move(annotation)});
  fw_.incoming_.emplace_back();
  fw_.outgoing_.emplace_back();
  return index;
}

AttackIndex FrameworkBuilder::add_attack(std::string_view source, std::string_view target) {
  auto s = fw_.find(source);
  if (!s) throw InvalidInput("undeclared argument `" + std::string(source) + "`");
  auto t = fw_.find(target);
  if (!t) throw InvalidInput("undeclared argument `" + std::string(target) + "`");
  return add_attack(*s, *t);
}

AttackIndex FrameworkBuilder::add_attack(ArgIndex source, ArgIndex target) {
  if (source >= fw_.arguments_.size() || target >= fw_.arguments_.size())
    throw InvalidInput("attack endpoint out of range");
  auto key = Framework::edge_key(source, target);
  if (fw_.by_edge_.count(key))
    throw InvalidInput("duplicate attack (" + fw_.arguments_[source].id + "," +
                       fw_.arguments_[target].id + ")");
  if (fw_.attacks_.size() >= Framework::kMaxAttacks)
    throw LimitError("more than " + std::to_string(Framework::kMaxAttacks) + " attacks", 0);
  auto index = static_cast<AttackIndex>(fw_.attacks_.size());
  fw_.attacks_.push_back({source, target});
  fw_.by_edge_.emplace(key, index);
  fw_.outgoing_[source].push_back(index);
  fw_.incoming_[target].push_back(index);
  return index;
}

Framework FrameworkBuilder::build() && { return std::move(fw_); }

std::vector<AttackIndex> resolve_attacks(
    const Framework& framework, std::span<const std::pair<std::string, std::string>> edges) {
  std::vector<AttackIndex> out;
  out.reserve(edges.size());
  for (const auto& [source, target] : edges) {
    auto found = framework.find_attack(source, target);
    if (!found)
      throw InvalidInput("unknown attack (" + source + "," + target + ")");
    out.push_back(*found);
  }
  return out;
}

}  // namespace afscope
