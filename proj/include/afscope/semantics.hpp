#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "afscope/framework.hpp"
#include "afscope/labelling.hpp"

namespace afscope {

enum class Semantics { kGrounded, kComplete, kStable, kPreferred };

std::string_view to_string(Semantics semantics) noexcept;
std::optional<Semantics> semantics_from_string(std::string_view text) noexcept;

struct EnumerationLimits {
  /// Cap on complete labellings collected before giving up.
  std::size_t max_solutions = 10'000;
};

struct SolutionSet {
  Semantics semantics = Semantics::kGrounded;
  /// Ordered by IN-set: at the first argument (declaration order) whose IN
  /// membership differs, the labelling that has it IN comes first.
  std::vector<Labelling> solutions;
  /// The search hit EnumerationLimits::max_solutions.
  bool truncated = false;
};

/// Orders two complete labellings of the same framework by IN-set.
bool in_set_less(const Labelling& a, const Labelling& b);

/// All labellings of `framework` under `semantics`. The grounded part is
/// fixed; the search backtracks over the grounded UNDEC arguments only.
SolutionSet enumerate(const Framework& framework, Semantics semantics,
                      EnumerationLimits limits = {});

/// The `index`-th labelling of enumerate(framework, semantics). Throws
/// OutOfRange past the end.
Labelling solution(const Framework& framework, Semantics semantics, std::size_t index,
                   EnumerationLimits limits = {});

}  // namespace afscope
