#include "afscope/classify.hpp"

#include <string>

#include "afscope/error.hpp"
#include "afscope/grounded.hpp"

namespace afscope {

std::string_view to_string(EdgeClass cls) noexcept {
  switch (cls) {
    case EdgeClass::kPrimary:
      return "primary";
    case EdgeClass::kSecondary:
      return "secondary";
    case EdgeClass::kFailed:
      return "failed";
    case EdgeClass::kBlunder:
      return "blunder";
    case EdgeClass::kContested:
      return "contested";
    case EdgeClass::kMoot:
      return "moot";
  }
  return "moot";
}

EdgeClassification classify_edges(const Framework& framework, const Labelling& labelling,
                                  const LengthMap& lengths,
                                  std::span<const AttackIndex> suspended) {
  if (labelling.size() != framework.size() || lengths.size() != framework.size())
    throw InvalidInput("labelling/lengths do not match the framework size");
  auto active = active_mask(framework, suspended);
  if (!is_complete_labelling(framework, labelling, active))
    throw InvalidInput("labelling is not legal for the framework");
  for (ArgIndex x = 0; x < framework.size(); ++x) {
    Length len = lengths[x];
    bool ok = labelling[x] == Label::kUndec
                  ? !len.is_finite()
                  : len.is_finite() && (len.value() % 2 == (labelling[x] == Label::kOut ? 1u : 0u));
    if (!ok)
      throw InvalidInput("length of `" + framework.id(x) + "` inconsistent with its label");
  }

  const auto& attacks = framework.attacks();
  EdgeClassification out;
  out.classes.resize(attacks.size());
  for (AttackIndex a = 0; a < attacks.size(); ++a) {
    if (!active[a]) continue;
    auto [x, y] = attacks[a];
    Label lx = labelling[x];
    Label ly = labelling[y];
    EdgeClass cls;
    if (lx == Label::kOut) {
      // OUT -> IN attacks are part of the target's justification; only the
      // rest are irrelevant to provenance.
      cls = ly == Label::kIn ? EdgeClass::kFailed : EdgeClass::kBlunder;
    } else if (lx == Label::kIn) {
      // Legality rules out IN -> IN and IN -> UNDEC.
      if (ly != Label::kOut) throw InvalidInput("IN argument attacks a non-OUT argument");
      auto next = lengths[x].value() + 1;
      if (lengths[y].value() > next)
        throw InvalidInput("`" + framework.id(y) + "` is defeated later than its IN attacker allows");
      cls = lengths[y].value() == next ? EdgeClass::kPrimary : EdgeClass::kSecondary;
    } else {
      if (ly == Label::kIn) throw InvalidInput("UNDEC argument attacks an IN argument");
      cls = ly == Label::kUndec ? EdgeClass::kContested : EdgeClass::kMoot;
    }
    out.classes[a] = cls;
  }
  return out;
}

}  // namespace afscope
