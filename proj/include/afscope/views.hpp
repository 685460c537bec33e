#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "afscope/explain.hpp"
#include "afscope/framework.hpp"

namespace afscope {

/// Everything a renderer needs for one picture: the result that fixes the
/// layering, the edge classes to draw and an optional overlay.
struct View {
  GroundedResult layering;
  EdgeClassification classification;
  std::optional<Overlay> overlay;

  std::string dot(const Framework& framework) const;
  std::string layout_json(const Framework& framework) const;
};

/// The grounded result with its own edge classes.
View base_view(const Framework& framework);

/// Solution `explanation` drawn over the base. Without `delta` the base edge
/// classes are shown; with it, the classes after suspending that critical
/// set, which is drawn red. Throws OutOfRange for a bad delta.
View solution_view(const Framework& framework, const Explanation& explanation,
                   std::optional<std::size_t> delta);

/// The grounded result after suspending `suspended`. Drawn over the base
/// layering when it only decides base-UNDEC arguments, otherwise laid out
/// on its own lengths.
View what_if_view(const Framework& framework, std::span<const AttackIndex> suspended);

}  // namespace afscope
