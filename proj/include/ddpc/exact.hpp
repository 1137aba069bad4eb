#pragma once

#include <cstdint>
#include <optional>

#include "ddpc/cover.hpp"
#include "ddpc/digraph.hpp"

namespace ddpc {

// Exhaustive search, exact; deterministic (lowest label first). The exact
// solver supports orders up to 64.
std::optional<DiPath> find_hamiltonian_path(const Digraph& d, Vertex s, Vertex t);

// Returns a cover accepted by verify_cover iff one exists. Exact decision.
std::optional<PathCover> find_cover_exact(const Digraph& d, const CoverSpec& spec);

bool exists_cover(const Digraph& d, const CoverSpec& spec);

enum class CoverabilityVerdict { ProvenTrue, ProvenFalse, SampledTrue };

const char* to_string(CoverabilityVerdict v);

struct SamplingBudget {
  // Quantify over all admissible (S,T) when their count is at most this.
  std::uint64_t exhaustive_cap = 100000;
  // Otherwise draw this many seeded uniform samples.
  int samples = 1000;
  std::uint64_t seed = 0;
};

struct CoverabilityResult {
  CoverabilityVerdict verdict;
  // The failing (S,T) when verdict is ProvenFalse.
  std::optional<CoverSpec> counterexample;
  std::uint64_t choices_checked = 0;
  bool exhaustive = false;
};

// Decides "D is k-coverable for this kind": a cover exists for every
// admissible (S,T). SampledTrue means no failure among the sampled choices.
CoverabilityResult is_k_coverable(const Digraph& d, CoverKind kind, int k,
                                  const SamplingBudget& budget = {});

}  // namespace ddpc
