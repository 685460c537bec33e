#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace afscope {

using ArgIndex = std::uint32_t;
using AttackIndex = std::uint32_t;

/// Legal gloss attached to an argument. `text` may be empty only when a
/// `url` is present.
struct Annotation {
  std::string text;
  std::optional<std::string> url;

  bool operator==(const Annotation&) const = default;
};

struct Argument {
  std::string id;
  std::optional<Annotation> annotation;

  bool operator==(const Argument&) const = default;
};

/// Attack edge between two arguments of the owning framework, by position.
struct Attack {
  ArgIndex source = 0;
  ArgIndex target = 0;

  auto operator<=>(const Attack&) const = default;
};

/// True if `id` is a usable argument name: non-empty, no whitespace and
/// none of `(`, `)`, `,`, `.`.
bool is_valid_argument_id(std::string_view id) noexcept;

/// True if `url` looks like an absolute URL (`scheme:rest`).
bool is_absolute_url(std::string_view url) noexcept;

/// Immutable abstract argumentation framework. Arguments and attacks keep
/// their declaration order, which every downstream enumeration relies on.
class Framework {
 public:
  static constexpr std::size_t kMaxArguments = 10'000;
  static constexpr std::size_t kMaxAttacks = 100'000;

  Framework() = default;

  std::size_t size() const noexcept { return arguments_.size(); }
  bool empty() const noexcept { return arguments_.empty(); }

  const std::vector<Argument>& arguments() const noexcept { return arguments_; }
  const std::vector<Attack>& attacks() const noexcept { return attacks_; }

  const std::string& id(ArgIndex arg) const { return arguments_.at(arg).id; }
  const std::optional<Annotation>& annotation(ArgIndex arg) const {
    return arguments_.at(arg).annotation;
  }

  std::optional<ArgIndex> find(std::string_view id) const;
  /// Throws InvalidInput for an unknown id.
  ArgIndex index_of(std::string_view id) const;

  std::optional<AttackIndex> find_attack(ArgIndex source, ArgIndex target) const;
  std::optional<AttackIndex> find_attack(std::string_view source,
                                         std::string_view target) const;

  /// Incoming attack indices of `arg`, in declaration order.
  std::span<const AttackIndex> attackers_of(ArgIndex arg) const { return incoming_[arg]; }
  /// Outgoing attack indices of `arg`, in declaration order.
  std::span<const AttackIndex> attacks_from(ArgIndex arg) const { return outgoing_[arg]; }

  /// Framework without annotations (what APX can carry).
  Framework without_annotations() const;

  bool operator==(const Framework& other) const {
    return arguments_ == other.arguments_ && attacks_ == other.attacks_;
  }

 private:
  friend class FrameworkBuilder;

  static std::uint64_t edge_key(ArgIndex s, ArgIndex t) {
    return (static_cast<std::uint64_t>(s) << 32) | t;
  }

  std::vector<Argument> arguments_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<AttackIndex>> incoming_;
  std::vector<std::vector<AttackIndex>> outgoing_;
  std::unordered_map<std::string, ArgIndex> by_id_;
  std::unordered_map<std::uint64_t, AttackIndex> by_edge_;
};

/// Incremental construction with integrity checks. Every violation throws
/// InvalidInput (or LimitError past the size guardrail); parsers attach
/// positions.
class FrameworkBuilder {
 public:
  ArgIndex add_argument(std::string id, std::optional<Annotation> annotation = std::nullopt);
  AttackIndex add_attack(std::string_view source, std::string_view target);
  AttackIndex add_attack(ArgIndex source, ArgIndex target);

  bool has_argument(std::string_view id) const { return fw_.find(id).has_value(); }

  Framework build() &&;

 private:
  Framework fw_;
};

/// Resolves (source, target) name pairs to attack indices. Throws
/// InvalidInput naming the first pair that is not an attack of `framework`.
std::vector<AttackIndex> resolve_attacks(
    const Framework& framework,
    std::span<const std::pair<std::string, std::string>> edges);

}  // namespace afscope
