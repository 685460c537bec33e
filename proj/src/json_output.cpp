#include "afscope/json_output.hpp"

namespace afscope::json {

Json labels(const Framework& framework, const Labelling& labelling) {
  Json out = Json::object();
  for (ArgIndex x = 0; x < framework.size(); ++x)
    out[framework.id(x)] = std::string(to_string(labelling[x]));
  return out;
}

Json lengths(const Framework& framework, const LengthMap& lengths) {
  Json out = Json::object();
  for (ArgIndex x = 0; x < framework.size(); ++x) {
    if (lengths[x].is_finite())
      out[framework.id(x)] = lengths[x].value();
    else
      out[framework.id(x)] = "inf";
  }
  return out;
}

Json grounded(const Framework& framework, const GroundedResult& result) {
  Json out;
  out["labels"] = labels(framework, result.labelling);
  out["lengths"] = lengths(framework, result.lengths);
  return out;
}

Json solutions(const Framework& framework, const SolutionSet& set) {
  Json out;
  out["semantics"] = std::string(to_string(set.semantics));
  out["count"] = set.solutions.size();
  out["truncated"] = set.truncated;
  out["solutions"] = Json::array();
  for (const auto& s : set.solutions) out["solutions"].push_back(labels(framework, s));
  return out;
}

Json classification(const Framework& framework, const EdgeClassification& classes) {
  Json edges = Json::array();
  const auto& attacks = framework.attacks();
  for (AttackIndex a = 0; a < attacks.size(); ++a) {
    Json e;
    e["source"] = framework.id(attacks[a].source);
    e["target"] = framework.id(attacks[a].target);
    const auto& cls = classes.classes[a];
    e["class"] = cls ? std::string(to_string(*cls)) : std::string("suspended");
    edges.push_back(std::move(e));
  }
  Json out;
  out["edges"] = std::move(edges);
  return out;
}

Json edge_list(const Framework& framework, std::span<const AttackIndex> edges) {
  Json out = Json::array();
  for (AttackIndex a : edges) {
    const auto& att = framework.attacks()[a];
    out.push_back({framework.id(att.source), framework.id(att.target)});
  }
  return out;
}

Json explanation(const Framework& framework, const Explanation& explanation) {
  Json out;
  out["solution"] = explanation.solution_index;
  Json resolved = Json::array();
  for (ArgIndex x : explanation.overlay.resolved) resolved.push_back(framework.id(x));
  out["overlay"]["resolved"] = std::move(resolved);
  out["overlay"]["labels"] = labels(framework, explanation.overlay.effective_labels);
  out["critical_sets"] = Json::array();
  for (const auto& set : explanation.critical_sets) {
    Json entry;
    entry["edges"] = edge_list(framework, set.edges);
    entry["resolution_labels"] = labels(framework, set.resolution.labelling);
    out["critical_sets"].push_back(std::move(entry));
  }
  out["truncated"] = explanation.truncated;
  return out;
}

Json annotations(const Framework& framework) {
  Json out = Json::object();
  for (const auto& arg : framework.arguments()) {
    if (!arg.annotation) continue;
    Json entry;
    entry["text"] = arg.annotation->text;
    if (arg.annotation->url) entry["url"] = *arg.annotation->url;
    out[arg.id] = std::move(entry);
  }
  return out;
}

Json layout(const Framework& framework, const GroundedResult& grounded,
            const EdgeClassification& classes, const Overlay* overlay) {
  const Layout lay = layered_layout(framework, grounded);
  Json out;
  Json layers = Json::object();
  for (ArgIndex x = 0; x < framework.size(); ++x)
    if (lay.layer[x]) layers[framework.id(x)] = *lay.layer[x];
  out["layers"] = std::move(layers);
  Json band = Json::array();
  for (ArgIndex x : lay.band) band.push_back(framework.id(x));
  out["band"] = std::move(band);
  Json order = Json::array();
  for (const auto& row : lay.order) {
    Json ids = Json::array();
    for (ArgIndex x : row) ids.push_back(framework.id(x));
    order.push_back(std::move(ids));
  }
  out["order"] = std::move(order);
  Json names = Json::object();
  for (ArgIndex x = 0; x < framework.size(); ++x) names[framework.id(x)] = lay.display_name[x];
  out["display_names"] = std::move(names);
  out["labels"] = labels(framework, overlay ? overlay->effective_labels : grounded.labelling);
  out["lengths"] = lengths(framework, grounded.lengths);

  Json edges = Json::array();
  const auto& attacks = framework.attacks();
  for (AttackIndex a = 0; a < attacks.size(); ++a) {
    Json e;
    e["source"] = framework.id(attacks[a].source);
    e["target"] = framework.id(attacks[a].target);
    const auto& cls = classes.classes[a];
    e["class"] = cls ? std::string(to_string(*cls)) : std::string("suspended");
    e["suspended"] = !cls.has_value();
    edges.push_back(std::move(e));
  }
  out["edges"] = std::move(edges);
  Json resolved = Json::array();
  if (overlay)
    for (ArgIndex x : overlay->resolved) resolved.push_back(framework.id(x));
  out["resolved"] = std::move(resolved);
  out["annotations"] = annotations(framework);
  return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace afscope::json
