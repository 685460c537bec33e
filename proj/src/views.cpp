#include "afscope/views.hpp"

#include <string>

#include "afscope/error.hpp"
#include "afscope/layout.hpp"

namespace afscope {

std::string View::dot(const Framework& framework) const {
  return export_dot(framework, layering, classification, overlay ? &*overlay : nullptr);
}

std::string View::layout_json(const Framework& framework) const {
  return export_layout_json(framework, layering, classification, overlay ? &*overlay : nullptr);
}

View base_view(const Framework& framework) {
  auto g = grounded(framework);
  auto classes = classify_edges(framework, g.labelling, g.lengths);
  return {std::move(g), std::move(classes), std::nullopt};
}

View solution_view(const Framework& framework, const Explanation& explanation,
                   std::optional<std::size_t> delta) {
  const GroundedResult& base = explanation.overlay.base;
  if (!delta)
    return {base, classify_edges(framework, base.labelling, base.lengths), explanation.overlay};
  if (*delta >= explanation.critical_sets.size())
    throw OutOfRange("critical set " + std::to_string(*delta) + " does not exist (" +
                     std::to_string(explanation.critical_sets.size()) + " found)");
  auto w = what_if(framework, explanation.critical_sets[*delta].edges);
  return {base, std::move(w.classification), explanation.overlay};
}

View what_if_view(const Framework& framework, std::span<const AttackIndex> suspended) {
  auto w = what_if(framework, suspended);
  auto base = grounded(framework);
  if (auto overlay = what_if_overlay(base, w))
    return {std::move(base), std::move(w.classification), std::move(overlay)};
  return {std::move(w.result), std::move(w.classification), std::nullopt};
}

}  // namespace afscope
