#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "nestlogit/nested_logit.hpp"

namespace nestlogit {

// Model file layout:
//   {"root": {"id": "0", "lambda": 1.0, "children": [
//       {"id": "a", "lambda": 0.5, "children": [{"id": "1", "utility": 0.0}, ...]},
//       {"id": "3", "utility": 0.0}]}}
// Nests carry "lambda" and a non-empty "children" array; alternatives carry
// "utility". Schema violations raise ParseError naming the JSON path.

ModelSpec parse_model(std::string_view text);
/// Throws IoError when the file cannot be read.
ModelSpec load_model(const std::filesystem::path& path);

/// Serialises a model back to the file layout (two-space indent).
std::string model_to_json(const ModelSpec& model);

/// Parses "leafid=value" overrides. ParseError on malformed entries.
std::map<std::string, double> parse_assignments(std::span<const std::string> items);

/// Replaces the utilities of the named alternatives. UnknownNode for unknown
/// ids, NotALeaf when an id names a nest.
ModelSpec override_utilities(const ModelSpec& model, const std::map<std::string, double>& values);

}  // namespace nestlogit
