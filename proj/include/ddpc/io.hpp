#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ddpc/cover.hpp"
#include "ddpc/digraph.hpp"

namespace ddpc {

// Digraph JSON: {"n": <int>, "arcs": [[u,v], ...]}, arcs sorted
// lexicographically on write. Parsing is strict: loops, out-of-range
// endpoints and duplicate arcs are rejected with a diagnostic.
nlohmann::ordered_json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const nlohmann::json& j);
Digraph parse_digraph(const std::string& text);
std::string emit_digraph(const Digraph& d);

// DOT export, write-only.
std::string to_dot(const Digraph& d);

// Spec JSON: {"kind": "...", "k": ..., "S": [...], "T": [...]}; a cover
// adds "paths": [[...], ...].
nlohmann::ordered_json spec_to_json(const CoverSpec& spec);
CoverSpec spec_from_json(const nlohmann::json& j);
nlohmann::ordered_json cover_to_json(const CoverSpec& spec, const PathCover& cover);
PathCover cover_paths_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ddpc
