#include "ddpc/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ddpc/errors.hpp"

namespace ddpc {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json digraph_to_json(const Digraph& d) {
  ordered_json j;
  j["n"] = d.order();
  auto arcs = d.arcs();  // already lexicographic
  j["arcs"] = json::array();
  for (const auto& [u, v] : arcs) j["arcs"].push_back({u, v});
  return j;
}

Digraph digraph_from_json(const json& j) {
  DDPC_REQUIRE(j.is_object() && j.contains("n") && j.contains("arcs"),
               "digraph JSON must be an object with \"n\" and \"arcs\"");
  DDPC_REQUIRE(j["n"].is_number_integer(), "\"n\" must be an integer");
  int n = j["n"].get<int>();
  DDPC_REQUIRE(n >= 0, "\"n\" must be non-negative");
  DDPC_REQUIRE(j["arcs"].is_array(), "\"arcs\" must be an array");
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  int idx = 0;
  for (const auto& e : j["arcs"]) {
    std::string at = "arcs[" + std::to_string(idx++) + "]";
    DDPC_REQUIRE(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                     e[1].is_number_integer(),
                 at + " must be a pair of integers");
    int u = e[0].get<int>(), v = e[1].get<int>();
    DDPC_REQUIRE(u >= 0 && u < n && v >= 0 && v < n,
                 at + ": endpoint out of range");
    DDPC_REQUIRE(u != v, at + ": loop arc");
    DDPC_REQUIRE(seen.insert({u, v}).second, at + ": duplicate arc");
    arcs.emplace_back(u, v);
  }
  return Digraph(n, arcs);
}

Digraph parse_digraph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw precondition_error(std::string("digraph JSON parse error: ") + e.what());
  }
  return digraph_from_json(j);
}

std::string emit_digraph(const Digraph& d) { return digraph_to_json(d).dump(); }

std::string to_dot(const Digraph& d) {
  std::ostringstream os;
  os << "digraph {\n";
  for (Vertex v = 0; v < d.order(); ++v) os << "  " << v << ";\n";
  for (const auto& [u, v] : d.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

ordered_json spec_to_json(const CoverSpec& spec) {
  ordered_json j;
  j["kind"] = to_string(spec.kind);
  j["k"] = spec.k;
  j["S"] = spec.sources;
  j["T"] = spec.sinks;
  return j;
}

CoverSpec spec_from_json(const json& j) {
  DDPC_REQUIRE(j.is_object() && j.contains("kind") && j.contains("k") &&
                   j.contains("S") && j.contains("T"),
               "spec JSON must contain \"kind\", \"k\", \"S\", \"T\"");
  CoverSpec spec;
  spec.kind = cover_kind_from_string(j["kind"].get<std::string>());
  spec.k = j["k"].get<int>();
  spec.sources = j["S"].get<std::vector<Vertex>>();
  spec.sinks = j["T"].get<std::vector<Vertex>>();
  return spec;
}

ordered_json cover_to_json(const CoverSpec& spec, const PathCover& cover) {
  ordered_json j = spec_to_json(spec);
  j["paths"] = cover.paths;
  return j;
}

PathCover cover_paths_from_json(const json& j) {
  DDPC_REQUIRE(j.is_object() && j.contains("paths"),
               "cover JSON must contain \"paths\"");
  PathCover cover;
  cover.paths = j["paths"].get<std::vector<DiPath>>();
  return cover;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  DDPC_REQUIRE(in.good(), "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  DDPC_REQUIRE(out.good(), "cannot open file for writing: " + path);
  out << content;
}

}  // namespace ddpc
