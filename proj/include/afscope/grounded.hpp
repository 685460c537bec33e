#pragma once

#include <span>
#include <vector>

#include "afscope/framework.hpp"
#include "afscope/labelling.hpp"

namespace afscope {

/// Skeptical (grounded) solution with per-argument lengths.
struct GroundedResult {
  Labelling labelling;
  LengthMap lengths;
  /// UNDEC arguments in declaration order.
  std::vector<ArgIndex> undec_set;

  bool operator==(const GroundedResult&) const = default;
};

/// Grounded labelling only: the least fixpoint of "IN when every attacker
/// is OUT, OUT when some attacker is IN", everything else UNDEC.
/// `active` masks attacks (empty = all active).
Labelling grounded_labelling(const Framework& framework, const std::vector<bool>& active = {});

/// Grounded labelling plus lengths.
GroundedResult grounded(const Framework& framework);

/// Game-theoretic lengths of a grounded labelling, the least solution of
///
///   unattacked IN x:  0
///   OUT x:            1 + min{ len(y) : y attacks x, y IN }
///   attacked IN x:    1 + max{ len(y) : y attacks x }
///   UNDEC x:          infinite
///
/// obtained by relaxation from infinity. Throws InvalidInput unless
/// `labelling` is the grounded labelling of `framework`.
LengthMap lengths(const Framework& framework, const Labelling& labelling);

/// Grounded result of `framework` with the `suspended` attacks removed.
/// Throws InvalidInput for an index that is not an attack of `framework`.
GroundedResult grounded_after_suspension(const Framework& framework,
                                         std::span<const AttackIndex> suspended);

/// Attack mask with the `suspended` attacks switched off.
std::vector<bool> active_mask(const Framework& framework, std::span<const AttackIndex> suspended);

}  // namespace afscope
