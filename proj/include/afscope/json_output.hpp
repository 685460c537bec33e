#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "afscope/classify.hpp"
#include "afscope/explain.hpp"
#include "afscope/framework.hpp"
#include "afscope/grounded.hpp"
#include "afscope/layout.hpp"
#include "afscope/semantics.hpp"

// JSON views of engine results. Object keys follow declaration order so
// the documents are byte-stable.
namespace afscope::json {

using Json = nlohmann::ordered_json;

/// {"<id>":"in|out|undec",...}
Json labels(const Framework& framework, const Labelling& labelling);
/// {"<id>":int|"inf",...}
Json lengths(const Framework& framework, const LengthMap& lengths);
/// {"labels":{..},"lengths":{..}}
Json grounded(const Framework& framework, const GroundedResult& result);
/// {"semantics":..,"count":n,"truncated":bool,"solutions":[{..},..]}
Json solutions(const Framework& framework, const SolutionSet& set);
/// {"edges":[{"source","target","class"},..]}; suspended attacks get
/// class "suspended".
Json classification(const Framework& framework, const EdgeClassification& classes);
/// [["x","y"],..]
Json edge_list(const Framework& framework, std::span<const AttackIndex> edges);
/// {"solution":i,"overlay":{"resolved":[..],"labels":{..}},
///  "critical_sets":[{"edges":[..],"resolution_labels":{..}}],"truncated":bool}
Json explanation(const Framework& framework, const Explanation& explanation);
/// {"<id>":{"text":..,"url":..}} for annotated arguments.
Json annotations(const Framework& framework);
/// Full layout document; see export_layout_json.
Json layout(const Framework& framework, const GroundedResult& grounded,
            const EdgeClassification& classes, const Overlay* overlay);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& doc);

}  // namespace afscope::json
