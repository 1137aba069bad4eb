#pragma once

#include <string>
#include <vector>

#include "ddpc/digraph.hpp"

namespace ddpc {

enum class CoverKind { UnpairedMTM, PairedMTM, OneToMany, OneToOne };

const char* to_string(CoverKind kind);
CoverKind cover_kind_from_string(const std::string& name);

// A cover request: kind, path count k and the designated endpoint lists.
// MTM kinds: |sources| = |sinks| = k, disjoint.
// OneToMany:  sources = {s}, |sinks| = k, s not in sinks.
// OneToOne:   sources = {s}, sinks = {t}, s != t; k paths from s to t.
struct CoverSpec {
  CoverKind kind = CoverKind::UnpairedMTM;
  int k = 1;
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
};

// Nonempty vertex sequence; consecutive vertices must be arcs of the
// ambient digraph, no vertex repeats.
using DiPath = std::vector<Vertex>;

struct PathCover {
  std::vector<DiPath> paths;
};

enum class RejectReason { None, WrongCount, BadArc, BadEndpoint, Overlap, Uncovered };

const char* to_string(RejectReason reason);

struct VerifyResult {
  bool accepted = false;
  RejectReason reason = RejectReason::None;
  std::string detail;
  explicit operator bool() const { return accepted; }
};

// Returns the list of spec violations; empty means the spec is admissible
// for this digraph.
std::vector<std::string> validate_spec(const Digraph& d, const CoverSpec& spec);

// Ground-truth predicate: accepts iff `cover` is a DDPC of the requested
// kind for (d, spec). Throws precondition_error if the spec itself is
// invalid; a malformed cover is a reject, not an error.
VerifyResult verify_cover(const Digraph& d, const CoverSpec& spec,
                          const PathCover& cover);

}  // namespace ddpc
