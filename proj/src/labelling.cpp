#include "afscope/labelling.hpp"

#include <algorithm>

namespace afscope {

std::string_view to_string(Label label) noexcept {
  switch (label) {
    case Label::kIn:
      return "in";
    case Label::kOut:
      return "out";
    case Label::kUndec:
      return "undec";
  }
  return "undec";
}

std::optional<Label> label_from_string(std::string_view text) noexcept {
  if (text == "in") return Label::kIn;
  if (text == "out") return Label::kOut;
  if (text == "undec") return Label::kUndec;
  return std::nullopt;
}

std::vector<ArgIndex> Labelling::with(Label label) const {
  std::vector<ArgIndex> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) out.push_back(static_cast<ArgIndex>(i));
  return out;
}

bool Labelling::is_total() const noexcept {
  return std::none_of(labels_.begin(), labels_.end(),
                      [](Label l) { return l == Label::kUndec; });
}

bool is_complete_labelling(const Framework& framework, const Labelling& labelling,
                           const std::vector<bool>& active) {
  if (labelling.size() != framework.size()) return false;
  const auto& attacks = framework.attacks();
  for (ArgIndex x = 0; x < framework.size(); ++x) {
    bool any_in = false;
    bool all_out = true;
    for (AttackIndex a : framework.attackers_of(x)) {
      if (!active.empty() && !active[a]) continue;
      Label l = labelling[attacks[a].source];
      any_in = any_in || l == Label::kIn;
      all_out = all_out && l == Label::kOut;
    }
    switch (labelling[x]) {
      case Label::kIn:
        if (!all_out) return false;
        break;
      case Label::kOut:
        if (!any_in) return false;
        break;
      case Label::kUndec:
        if (any_in || all_out) return false;
        break;
    }
  }
  return true;
}

}  // namespace afscope
