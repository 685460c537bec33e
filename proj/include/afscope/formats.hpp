#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "afscope/framework.hpp"

namespace afscope {

/// Interchange formats for frameworks.
///
/// - APX (ASPARTIX): `arg(a).` / `att(a,b).` statements, `%` comments.
///   Carries no annotations.
/// - TGF: node lines `id [label]`, a `#` line, then edge lines `src dst`.
///   The node label becomes the annotation text; urls are lost.
/// - JSON: `{"arguments":[{"id":..,"annotation":{"text":..,"url":..}}],
///   "attacks":[[src,dst],..]}`. Lossless.
enum class Format { kApx, kTgf, kJson };

std::string_view to_string(Format format) noexcept;
/// Accepts "apx", "tgf", "json" (case-sensitive).
std::optional<Format> format_from_name(std::string_view name) noexcept;
/// Sniffs the format from a path's extension (.apx, .tgf, .json).
std::optional<Format> format_from_path(std::string_view path) noexcept;

Framework parse_apx(std::string_view text);
Framework parse_tgf(std::string_view text);
Framework parse_json(std::string_view text);
Framework parse(std::string_view text, Format format);

/// Renders `framework` in `format`. Output is byte-stable. APX drops
/// annotations; TGF drops urls and flattens newlines in annotation text.
std::string serialize(const Framework& framework, Format format);

/// What survives a round trip through `format`.
Framework project_to_format(const Framework& framework, Format format);

}  // namespace afscope
