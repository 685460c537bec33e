#include "afscope/layout.hpp"

#include <algorithm>
#include <sstream>

#include "afscope/json_output.hpp"

namespace afscope {
namespace {

std::string dot_string(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        break;
      default:
        out += c;
    }
  }
  out += '"';
  return out;
}

std::string_view fill_for(Label label) {
  switch (label) {
    case Label::kIn:
      return palette::kIn;
    case Label::kOut:
      return palette::kOut;
    case Label::kUndec:
      return palette::kUndec;
  }
  return palette::kUndec;
}

struct EdgeStyle {
  std::string_view color;
  std::string_view style;
};

EdgeStyle style_for(const std::optional<EdgeClass>& cls) {
  if (!cls) return {palette::kCritical, "bold"};
  switch (*cls) {
    case EdgeClass::kPrimary:
      return {palette::kIn, "solid"};
    case EdgeClass::kSecondary:
      return {palette::kIn, "dashed"};
    case EdgeClass::kFailed:
      return {palette::kOut, "solid"};
    case EdgeClass::kBlunder:
      return {palette::kGray, "dotted"};
    case EdgeClass::kContested:
      return {palette::kContested, "solid"};
    case EdgeClass::kMoot:
      return {palette::kGray, "solid"};
  }
  return {palette::kGray, "solid"};
}

}  // namespace

Layout layered_layout(const Framework& framework, const GroundedResult& grounded) {
  const auto n = static_cast<ArgIndex>(framework.size());
  Layout out;
  out.layer.resize(n);
  out.display_name.resize(n);

  std::uint32_t top = 0;
  bool any_layered = false;
  for (ArgIndex x = 0; x < n; ++x) {
    Length len = grounded.lengths[x];
    if (len.is_finite()) {
      out.layer[x] = len.value();
      out.display_name[x] = framework.id(x) + "." + std::to_string(len.value());
      top = std::max(top, len.value());
      any_layered = true;
    } else {
      out.band.push_back(x);
      out.display_name[x] = framework.id(x);
    }
  }
  if (!any_layered) return out;

  out.order.resize(top + 1);
  for (ArgIndex x = 0; x < n; ++x)
    if (out.layer[x]) out.order[*out.layer[x]].push_back(x);

  const auto& attacks = framework.attacks();
  std::vector<std::uint32_t> position(n, 0);
  for (std::uint32_t k = 0; k <= top; ++k) {
    auto& row = out.order[k];
    if (k > 0) {
      // Barycenter as an exact fraction sum/count; count 0 sorts last.
      struct Key {
        std::uint64_t sum = 0;
        std::uint64_t count = 0;
      };
      std::vector<Key> key(n);
      for (ArgIndex x : row) {
        auto visit = [&](ArgIndex other) {
          if (out.layer[other] && *out.layer[other] < k) {
            key[x].sum += position[other];
            ++key[x].count;
          }
        };
        for (AttackIndex a : framework.attackers_of(x)) visit(attacks[a].source);
        for (AttackIndex a : framework.attacks_from(x)) visit(attacks[a].target);
      }
      std::stable_sort(row.begin(), row.end(), [&](ArgIndex a, ArgIndex b) {
        const Key& ka = key[a];
        const Key& kb = key[b];
        if ((ka.count == 0) != (kb.count == 0)) return kb.count == 0;
        if (ka.count == 0) return false;
        return ka.sum * kb.count < kb.sum * ka.count;
      });
    }
    for (std::uint32_t i = 0; i < row.size(); ++i) position[row[i]] = i;
  }
  return out;
}

std::string export_dot(const Framework& framework, const GroundedResult& grounded,
                       const EdgeClassification& classification, const Overlay* overlay) {
  const Layout layout = layered_layout(framework, grounded);
  const Labelling& labels = overlay ? overlay->effective_labels : grounded.labelling;
  std::vector<bool> resolved(framework.size(), false);
  if (overlay)
    for (ArgIndex x : overlay->resolved) resolved[x] = true;

  std::ostringstream out;
  auto node = [&](ArgIndex x) {
    out << "    " << dot_string(framework.id(x)) << " [label=" << dot_string(layout.display_name[x])
        << ", fillcolor=\"" << fill_for(labels[x]);
    if (resolved[x]) out << palette::kLightAlpha << "\", style=\"filled,dashed";
    out << '"';
    if (const auto& ann = framework.annotation(x)) {
      if (!ann->text.empty()) out << ", tooltip=" << dot_string(ann->text);
      if (ann->url) out << ", URL=" << dot_string(*ann->url);
    }
    out << "];\n";
  };

  out << "digraph af {\n"
      << "  rankdir=BT;\n"
      << "  newrank=true;\n"
      << "  node [shape=circle, style=filled, fontname=\"Helvetica\"];\n";
  for (std::size_t k = 0; k < layout.order.size(); ++k) {
    out << "  subgraph layer_" << k << " {\n    rank=same;\n";
    for (ArgIndex x : layout.order[k]) node(x);
    out << "  }\n";
  }
  if (!layout.band.empty()) {
    out << "  subgraph undec_band {\n    rank=same;\n";
    for (ArgIndex x : layout.band) node(x);
    out << "  }\n";
  }
  const auto& attacks = framework.attacks();
  for (AttackIndex a = 0; a < attacks.size(); ++a) {
    const auto& cls = classification.classes[a];
    auto style = style_for(cls);
    out << "  " << dot_string(framework.id(attacks[a].source)) << " -> "
        << dot_string(framework.id(attacks[a].target)) << " [class=\""
        << (cls ? to_string(*cls) : std::string_view("suspended")) << "\", color=\""
        << style.color << "\", style=" << style.style << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_layout_json(const Framework& framework, const GroundedResult& grounded,
                               const EdgeClassification& classification,
                               const Overlay* overlay) {
  return json::dump(json::layout(framework, grounded, classification, overlay));
}

}  // namespace afscope
