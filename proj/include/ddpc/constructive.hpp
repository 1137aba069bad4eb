#pragma once

#include <climits>

#include "ddpc/cover.hpp"
#include "ddpc/digraph.hpp"

namespace ddpc {

// Structural counters for the inductive solvers, filled when a non-null
// pointer is passed. Useful for checking recursion shape in tests.
struct SolveStats {
  int contractions = 0;           // unpaired_mtm_cover inductive steps
  int deletions = 0;              // one_to_one_cover inductive steps
  int base_claim_calls = 0;       // one_to_one_cover k=2 base invocations
  int min_claim_intersection = INT_MAX;  // smallest |X cap Y| seen in the base
};

// Unpaired many-to-many k-DDPC by contraction induction.
// Requires |S| = |T| = k >= 1 disjoint, n >= 3k, delta^0 >= ceil((n+k)/2).
PathCover unpaired_mtm_cover(const Digraph& d, const std::vector<Vertex>& S,
                             const std::vector<Vertex>& T,
                             SolveStats* stats = nullptr);

// Tight case n = 2k: every path is a single S->T arc found by bipartite
// maximum matching. Requires S and T to partition V, delta^0 >= ceil(3k/2)-1.
PathCover unpaired_mtm_cover_tight(const Digraph& d, const std::vector<Vertex>& S,
                                   const std::vector<Vertex>& T);

// Unpaired m-DDPC in the complete bipartite digraph K_{m,m} (parts
// {0..m-1} and {m..2m-1}) built from two matchings. Requires m >= 2 and
// S, T to partition the vertex set.
PathCover balanced_bipartite_cover(int m, const std::vector<Vertex>& S,
                                   const std::vector<Vertex>& T);

// Paired 2-DDPC via the merge-vertex reduction. Requires the four
// endpoints distinct and d+(x) + d-(y) >= n+2 for every non-arc pair.
PathCover paired_two_cover(const Digraph& d, Vertex s1, Vertex s2, Vertex t1,
                           Vertex t2, SolveStats* stats = nullptr);

// One-to-many k-DDPC: fan reduction to the unpaired many-to-many solver.
// Requires |T| = k >= 2, s not in T, n >= 3k, delta^0 >= ceil((n+k)/2).
PathCover one_to_many_cover(const Digraph& d, Vertex s,
                            const std::vector<Vertex>& T,
                            SolveStats* stats = nullptr);

// One-to-one k-DDPC: Hamiltonian-path split base (k=2) plus vertex-deletion
// induction. Requires s != t, k >= 2, n >= k+1, delta^0 >= ceil((n+k-1)/2).
PathCover one_to_one_cover(const Digraph& d, Vertex s, Vertex t, int k,
                           SolveStats* stats = nullptr);

}  // namespace ddpc
