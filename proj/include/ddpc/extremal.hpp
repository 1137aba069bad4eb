#pragma once

#include <optional>
#include <string>

#include "ddpc/cover.hpp"
#include "ddpc/digraph.hpp"

namespace ddpc {

enum class ExtremalFamily {
  UnpairedSharpEven,   // glued cliques, n+k even
  UnpairedSharpOdd,    // clique joined to an empty digraph, n+k odd
  TightSharpOddK,      // n = 2k, odd k
  TightSharpEvenK,     // n = 2k, even k
  Paired2Figure1,      // Ore-sharp paired 2-DDPC digraph
  OneToManySharpOdd,   // glued cliques, n+k odd
  OneToManySharpEven,  // clique joined to an empty digraph, n+k even
  OneToOneSharpOdd,    // glued cliques, n+k odd
  OneToOneSharpEven,   // glued cliques, n+k even
};

const char* to_string(ExtremalFamily family);
ExtremalFamily extremal_family_from_string(const std::string& name);

// A digraph one degree below the theorem threshold together with the
// (S,T) choice admitting no cover. Vertex layout: A-private block first,
// overlap next, B-private last (S-block last for the Figure-1 family).
struct ExtremalWitness {
  Digraph graph;
  int claimed_min_semi_degree = 0;
  std::optional<int> claimed_ore_min;  // set for the Figure-1 family
  CoverSpec spec;
  ExtremalFamily family;
  std::string note;  // degeneracy / out-of-stated-range flags
};

ExtremalWitness gen_unpaired_sharp(int n, int k);
ExtremalWitness gen_tight_sharp(int k);
ExtremalWitness gen_paired2_figure1(int n, int m);
ExtremalWitness gen_one_to_many_sharp(int n, int k);
ExtremalWitness gen_one_to_one_sharp(int n, int k);

// Dispatch by family. `a` is n except for TightSharp* (ignored, n = 2k);
// `b` is k, or m for the Figure-1 family.
ExtremalWitness generate_extremal(ExtremalFamily family, int a, int b);

// The matching theorem-side instance: same order and cover request, degrees
// meeting the theorem hypothesis exactly. Used to exhibit sharpness from
// both sides.
struct HypothesisSide {
  Digraph graph;
  CoverSpec spec;
};

HypothesisSide hypothesis_side(const ExtremalWitness& witness);

}  // namespace ddpc
