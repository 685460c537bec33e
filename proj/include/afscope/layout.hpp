#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afscope/classify.hpp"
#include "afscope/explain.hpp"
#include "afscope/framework.hpp"
#include "afscope/grounded.hpp"

namespace afscope {

/// Layered drawing of a grounded result. Finite-length arguments sit on the
/// layer equal to their length; UNDEC arguments form a separate band.
struct Layout {
  /// Per argument; nullopt for band members.
  std::vector<std::optional<std::uint32_t>> layer;
  /// UNDEC arguments in declaration order.
  std::vector<ArgIndex> band;
  /// order[k] lists the arguments of layer k left to right.
  std::vector<std::vector<ArgIndex>> order;
  /// `id.length` for layered arguments (e.g. "F.4"), the bare id otherwise.
  std::vector<std::string> display_name;
};

/// Places every argument and orders each layer with one bottom-up
/// barycenter sweep over already-placed lower-layer neighbours (attackers
/// and targets). Arguments without such neighbours go last; ties keep
/// declaration order.
Layout layered_layout(const Framework& framework, const GroundedResult& grounded);

/// Fixed palette used by the DOT export.
namespace palette {
inline constexpr std::string_view kIn = "#4C8BF5";
inline constexpr std::string_view kOut = "#F5A94C";
inline constexpr std::string_view kUndec = "#F5E64C";
inline constexpr std::string_view kCritical = "#D62828";
inline constexpr std::string_view kGray = "#9E9E9E";
inline constexpr std::string_view kContested = "#C8B400";
/// Appended to a fill colour for the lighter overlay variant (40% alpha).
inline constexpr std::string_view kLightAlpha = "66";
}  // namespace palette

/// Graphviz document: one rank per layer (bottom-up), the UNDEC band as a
/// rank above the top layer, fills and edge styles per label and class.
/// Suspended attacks in `classification` are drawn red. With an overlay,
/// node colours follow its effective labels and resolved arguments get
/// light fills with dashed outlines. Byte-stable.
std::string export_dot(const Framework& framework, const GroundedResult& grounded,
                       const EdgeClassification& classification,
                       const Overlay* overlay = nullptr);

/// Layout, labels, lengths, edge classes, overlay flags and annotations as
/// one JSON document (see README for the schema). Byte-stable.
std::string export_layout_json(const Framework& framework, const GroundedResult& grounded,
                               const EdgeClassification& classification,
                               const Overlay* overlay = nullptr);

}  // namespace afscope
