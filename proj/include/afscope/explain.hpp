#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "afscope/classify.hpp"
#include "afscope/framework.hpp"
#include "afscope/grounded.hpp"
#include "afscope/semantics.hpp"

namespace afscope {

/// A 2-valued solution drawn on top of the grounded base. Arguments that
/// were UNDEC in the base are `resolved` and take the target's label.
struct Overlay {
  GroundedResult base;
  Labelling target;
  std::vector<ArgIndex> resolved;
  Labelling effective_labels;
};

/// Throws InvalidInput if `target` is not total or changes an argument the
/// base already decided.
Overlay build_overlay(const GroundedResult& base, const Labelling& target);

/// Which attacks may be suspended when explaining a solution.
enum class CandidateMode {
  /// Attacks inside the base's UNDEC region whose attacker ends OUT and
  /// whose target ends IN in the solution.
  kFailing,
  /// Every attack with both endpoints in the base's UNDEC region.
  kAllUndec,
};

std::string_view to_string(CandidateMode mode) noexcept;
std::optional<CandidateMode> candidate_mode_from_string(std::string_view text) noexcept;

struct SearchBounds {
  std::size_t max_cardinality = 4;
  std::size_t max_tests = 50'000;
  std::size_t max_results = 100;
};

/// Polled between subset tests; returning true aborts with Cancelled.
using CancelCheck = std::function<bool()>;

struct CriticalAttackSet {
  /// Ascending attack indices.
  std::vector<AttackIndex> edges;
  /// Grounded result after suspending `edges`; total and equal to the target.
  GroundedResult resolution;
};

struct CriticalSearch {
  /// Ordered by cardinality, then lexicographically by attack index.
  std::vector<CriticalAttackSet> sets;
  /// A bound stopped the search before the candidate space was exhausted.
  bool truncated = false;
  std::size_t tests = 0;
};

/// Candidate attacks for `target`, ascending.
std::vector<AttackIndex> candidate_attacks(const Framework& framework, const GroundedResult& base,
                                           const Labelling& target, CandidateMode mode);

/// All subset-minimal sets of candidate attacks whose suspension makes the
/// grounded labelling total and equal to `target`, searched breadth-first
/// by cardinality within `bounds`. `target` must be a stable labelling and
/// `base` the grounded result of `framework`; otherwise InvalidInput.
CriticalSearch critical_attack_sets(const Framework& framework, const GroundedResult& base,
                                    const Labelling& target, const SearchBounds& bounds = {},
                                    CandidateMode mode = CandidateMode::kFailing,
                                    const CancelCheck& cancelled = {});

struct ExplainOptions {
  Semantics semantics = Semantics::kStable;
  SearchBounds bounds;
  CandidateMode candidates = CandidateMode::kFailing;
  EnumerationLimits limits;
};

struct Explanation {
  std::size_t solution_index = 0;
  Overlay overlay;
  std::vector<CriticalAttackSet> critical_sets;
  bool truncated = false;
};

/// Overlay and critical attack sets of solution `index` of `framework`.
/// Throws OutOfRange for a bad index, InvalidInput when the selected
/// solution is not 2-valued.
Explanation explain(const Framework& framework, std::size_t index,
                    const ExplainOptions& options = {}, const CancelCheck& cancelled = {});

struct WhatIf {
  GroundedResult result;
  /// Classes over the surviving attacks; suspended attacks are nullopt.
  EdgeClassification classification;
  /// Ascending, without duplicates.
  std::vector<AttackIndex> suspended;

  bool two_valued() const { return result.undec_set.empty(); }
};

/// Grounded result and edge classes after temporarily suspending attacks.
WhatIf what_if(const Framework& framework, std::span<const AttackIndex> suspended);

/// The what-if result drawn over the base layering: resolved arguments are
/// the base's UNDEC arguments it decides. nullopt when the suspension
/// changes an argument the base already decided, since the base layering
/// no longer describes it.
std::optional<Overlay> what_if_overlay(const GroundedResult& base, const WhatIf& what_if);

}  // namespace afscope
