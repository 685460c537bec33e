#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "afscope/framework.hpp"

namespace afscope {

enum class Label : std::uint8_t { kIn, kOut, kUndec };

std::string_view to_string(Label label) noexcept;
std::optional<Label> label_from_string(std::string_view text) noexcept;

/// Total assignment of a label to every argument of a framework, indexed by
/// declaration position.
class Labelling {
 public:
  Labelling() = default;
  explicit Labelling(std::size_t size, Label fill = Label::kUndec) : labels_(size, fill) {}
  explicit Labelling(std::vector<Label> labels) : labels_(std::move(labels)) {}

  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](ArgIndex arg) const { return labels_[arg]; }
  Label& operator[](ArgIndex arg) { return labels_[arg]; }

  const std::vector<Label>& labels() const noexcept { return labels_; }

  std::vector<ArgIndex> with(Label label) const;
  std::vector<ArgIndex> in_set() const { return with(Label::kIn); }
  std::vector<ArgIndex> undec_set() const { return with(Label::kUndec); }
  /// No argument is UNDEC.
  bool is_total() const noexcept;

  bool operator==(const Labelling&) const = default;

 private:
  std::vector<Label> labels_;
};

/// Game-theoretic length of an argument: a natural number or infinity.
class Length {
 public:
  constexpr Length() = default;
  constexpr explicit Length(std::uint32_t value) : value_(value) {}

  static constexpr Length infinite() { return Length(); }

  constexpr bool is_finite() const noexcept { return value_ != kInfinite; }
  /// Only meaningful when finite.
  constexpr std::uint32_t value() const noexcept { return value_; }

  constexpr auto operator<=>(const Length&) const = default;

 private:
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_ = kInfinite;
};

using LengthMap = std::vector<Length>;

/// Legality of `labelling` as a complete labelling of `framework`, counting
/// only attacks whose entry in `active` is true (empty = all attacks):
/// OUT iff some attacker is IN, IN iff every attacker is OUT.
bool is_complete_labelling(const Framework& framework, const Labelling& labelling,
                           const std::vector<bool>& active = {});

}  // namespace afscope
