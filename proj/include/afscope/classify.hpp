#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "afscope/framework.hpp"
#include "afscope/labelling.hpp"

namespace afscope {

/// Role of an attack edge relative to a labelling with lengths.
enum class EdgeClass {
  kPrimary,    // IN -> OUT, target defeated exactly one round later
  kSecondary,  // IN -> OUT, target already defeated at a lower length
  kFailed,     // OUT -> IN, the attack the target is defended against
  kBlunder,    // OUT -> OUT or OUT -> UNDEC
  kContested,  // UNDEC -> UNDEC
  kMoot,       // UNDEC -> OUT
};

std::string_view to_string(EdgeClass cls) noexcept;

struct EdgeClassification {
  /// Indexed by attack; nullopt marks a suspended attack.
  std::vector<std::optional<EdgeClass>> classes;

  bool is_suspended(AttackIndex a) const { return !classes[a].has_value(); }
  bool operator==(const EdgeClassification&) const = default;
};

/// Classifies every attack not in `suspended`. `labelling` must be legal
/// for the surviving attacks and `lengths` finite exactly on its IN/OUT
/// arguments with IN even and OUT odd; otherwise InvalidInput.
EdgeClassification classify_edges(const Framework& framework, const Labelling& labelling,
                                  const LengthMap& lengths,
                                  std::span<const AttackIndex> suspended = {});

}  // namespace afscope
