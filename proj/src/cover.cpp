#include "ddpc/cover.hpp"

#include <algorithm>
#include <set>

#include "ddpc/errors.hpp"

namespace ddpc {

const char* to_string(CoverKind kind) {
  switch (kind) {
    case CoverKind::UnpairedMTM: return "unpaired-mtm";
    case CoverKind::PairedMTM: return "paired-mtm";
    case CoverKind::OneToMany: return "one-to-many";
    case CoverKind::OneToOne: return "one-to-one";
  }
  return "?";
}

CoverKind cover_kind_from_string(const std::string& name) {
  if (name == "unpaired-mtm") return CoverKind::UnpairedMTM;
  if (name == "paired-mtm") return CoverKind::PairedMTM;
  if (name == "one-to-many") return CoverKind::OneToMany;
  if (name == "one-to-one") return CoverKind::OneToOne;
  throw precondition_error("unknown cover kind: " + name);
}

const char* to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::None: return "None";
    case RejectReason::WrongCount: return "WrongCount";
    case RejectReason::BadArc: return "BadArc";
    case RejectReason::BadEndpoint: return "BadEndpoint";
    case RejectReason::Overlap: return "Overlap";
    case RejectReason::Uncovered: return "Uncovered";
  }
  return "?";
}

namespace {

bool all_distinct(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool in_range(const Digraph& d, const std::vector<Vertex>& vs) {
  return std::all_of(vs.begin(), vs.end(),
                     [&](Vertex v) { return v >= 0 && v < d.order(); });
}

}  // namespace

std::vector<std::string> validate_spec(const Digraph& d, const CoverSpec& spec) {
  std::vector<std::string> bad;
  if (spec.k < 1) bad.push_back("k must be at least 1");
  if (!in_range(d, spec.sources)) bad.push_back("source vertex out of range");
  if (!in_range(d, spec.sinks)) bad.push_back("sink vertex out of range");
  if (!all_distinct(spec.sources)) bad.push_back("sources contain a repeat");
  if (!all_distinct(spec.sinks)) bad.push_back("sinks contain a repeat");
  for (Vertex s : spec.sources)
    if (std::find(spec.sinks.begin(), spec.sinks.end(), s) != spec.sinks.end())
      bad.push_back("sources and sinks must be disjoint");

  switch (spec.kind) {
    case CoverKind::UnpairedMTM:
    case CoverKind::PairedMTM:
      if (static_cast<int>(spec.sources.size()) != spec.k ||
          static_cast<int>(spec.sinks.size()) != spec.k)
        bad.push_back("many-to-many requires |S| = |T| = k");
      break;
    case CoverKind::OneToMany:
      if (spec.sources.size() != 1) bad.push_back("one-to-many requires |S| = 1");
      if (static_cast<int>(spec.sinks.size()) != spec.k)
        bad.push_back("one-to-many requires |T| = k");
      break;
    case CoverKind::OneToOne:
      if (spec.sources.size() != 1 || spec.sinks.size() != 1)
        bad.push_back("one-to-one requires |S| = |T| = 1");
      break;
  }
  return bad;
}

namespace {

VerifyResult reject(RejectReason reason, std::string detail) {
  return {false, reason, std::move(detail)};
}

}  // namespace

VerifyResult verify_cover(const Digraph& d, const CoverSpec& spec,
                          const PathCover& cover) {
  {
    auto bad = validate_spec(d, spec);
    DDPC_REQUIRE(bad.empty(), "invalid cover spec: " + bad.front());
  }
  const int k = spec.k;
  const int n = d.order();
  if (static_cast<int>(cover.paths.size()) != k)
    return reject(RejectReason::WrongCount,
                  "expected " + std::to_string(k) + " paths, got " +
                      std::to_string(cover.paths.size()));

  // Per-path structure: nonempty, in range, arcs present, no repeats.
  for (int i = 0; i < k; ++i) {
    const DiPath& p = cover.paths[i];
    if (p.empty())
      return reject(RejectReason::WrongCount, "path " + std::to_string(i) + " is empty");
    if (!in_range(d, p))
      return reject(RejectReason::BadArc,
                    "path " + std::to_string(i) + " has an out-of-range vertex");
    if (!all_distinct(p))
      return reject(RejectReason::Overlap,
                    "path " + std::to_string(i) + " repeats a vertex");
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
      if (!d.has_arc(p[j], p[j + 1]))
        return reject(RejectReason::BadArc,
                      "missing arc " + std::to_string(p[j]) + "->" +
                          std::to_string(p[j + 1]));
  }

  // Endpoint discipline.
  switch (spec.kind) {
    case CoverKind::PairedMTM:
      for (int i = 0; i < k; ++i)
        if (cover.paths[i].front() != spec.sources[i] ||
            cover.paths[i].back() != spec.sinks[i])
          return reject(RejectReason::BadEndpoint,
                        "path " + std::to_string(i) + " is not an s_i-t_i path");
      break;
    case CoverKind::UnpairedMTM: {
      std::vector<Vertex> terminals;
      for (int i = 0; i < k; ++i) {
        if (cover.paths[i].front() != spec.sources[i])
          return reject(RejectReason::BadEndpoint,
                        "path " + std::to_string(i) + " does not start at s_i");
        terminals.push_back(cover.paths[i].back());
      }
      // T has distinct vertices, so sigma exists iff the terminal sets match.
      std::vector<Vertex> want = spec.sinks;
      std::sort(terminals.begin(), terminals.end());
      std::sort(want.begin(), want.end());
      if (terminals != want)
        return reject(RejectReason::BadEndpoint,
                      "path terminals are not a permutation of T");
      break;
    }
    case CoverKind::OneToMany: {
      std::vector<Vertex> terminals;
      for (int i = 0; i < k; ++i) {
        if (cover.paths[i].front() != spec.sources[0])
          return reject(RejectReason::BadEndpoint,
                        "path " + std::to_string(i) + " does not start at s");
        terminals.push_back(cover.paths[i].back());
      }
      std::vector<Vertex> want = spec.sinks;
      std::sort(terminals.begin(), terminals.end());
      std::sort(want.begin(), want.end());
      if (terminals != want)
        return reject(RejectReason::BadEndpoint,
                      "each sink must terminate exactly one path");
      break;
    }
    case CoverKind::OneToOne:
      for (int i = 0; i < k; ++i)
        if (cover.paths[i].front() != spec.sources[0] ||
            cover.paths[i].back() != spec.sinks[0])
          return reject(RejectReason::BadEndpoint,
                        "path " + std::to_string(i) + " is not an s-t path");
      break;
  }

  // Disjointness. `shared` holds the endpoints every path is allowed to use.
  std::vector<Vertex> shared;
  if (spec.kind == CoverKind::OneToMany) shared = {spec.sources[0]};
  if (spec.kind == CoverKind::OneToOne) shared = {spec.sources[0], spec.sinks[0]};
  std::vector<int> hits(n, 0);
  for (const DiPath& p : cover.paths)
    for (Vertex v : p) ++hits[v];
  for (Vertex v = 0; v < n; ++v) {
    bool is_shared =
        std::find(shared.begin(), shared.end(), v) != shared.end();
    if (!is_shared && hits[v] > 1)
      return reject(RejectReason::Overlap,
                    "vertex " + std::to_string(v) + " lies on several paths");
  }
  if (spec.kind == CoverKind::OneToOne) {
    // A set of paths: two identical s-t arc paths are not two paths.
    std::set<DiPath> distinct(cover.paths.begin(), cover.paths.end());
    if (static_cast<int>(distinct.size()) != k)
      return reject(RejectReason::Overlap, "duplicate path");
  }

  // Coverage.
  for (Vertex v = 0; v < n; ++v)
    if (hits[v] == 0)
      return reject(RejectReason::Uncovered,
                    "vertex " + std::to_string(v) + " is not covered");

  return {true, RejectReason::None, ""};
}

}  // namespace ddpc
