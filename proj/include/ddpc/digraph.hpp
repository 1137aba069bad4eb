#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ddpc {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

// Loop-free simple digraph on vertices 0..n-1. Immutable after construction;
// surgeries return new values together with an explicit relabeling map.
class Digraph {
 public:
  Digraph() = default;
  // Duplicate arcs collapse (set semantics); loops and out-of-range
  // endpoints throw.
  Digraph(int n, const std::vector<Arc>& arcs);

  int order() const { return n_; }
  std::size_t arc_count() const { return m_; }
  bool has_arc(Vertex u, Vertex v) const;

  // Neighbor lists are sorted ascending.
  const std::vector<Vertex>& out_neighbors(Vertex u) const { return out_[u]; }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }
  int out_degree(Vertex u) const { return static_cast<int>(out_[u].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

  // All arcs, sorted lexicographically.
  std::vector<Arc> arcs() const;

  bool operator==(const Digraph&) const = default;

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> out_, in_;
};

struct DegreeSummary {
  std::vector<int> out_degree;
  std::vector<int> in_degree;
  int min_semi_degree = 0;  // delta^0: min over v of min(d+(v), d-(v))
  // min over ordered non-arc pairs (x,y), x != y, of d+(x)+d-(y);
  // nullopt when every ordered pair of distinct vertices is an arc.
  std::optional<int> ore_min;
};

struct VertexDeletion {
  Digraph graph;
  // old_to_new[v] is the surviving label, -1 for the deleted vertex.
  // Order-preserving: surviving labels keep their relative order.
  std::vector<int> old_to_new;
};

struct Contraction {
  Digraph graph;
  Vertex merged;  // the fresh vertex r, always the highest label n-2
  // old_to_new over the original vertex set; -1 for s and t.
  std::vector<int> old_to_new;
};

Digraph complete_digraph(int n);
Digraph complete_bipartite_digraph(int a, int b);
Digraph empty_digraph(int n);

// Two complete digraphs: A on {0..a-1}, B on {a-overlap..a+b-overlap-1},
// sharing the overlap block {a-overlap..a-1}. No arcs besides the cliques.
Digraph glued_cliques(int a, int b, int overlap);

// Disjoint union of d1 and d2 plus all arcs in both directions between the
// parts. d1's vertices keep their labels, d2's are shifted by d1.order().
Digraph full_join(const Digraph& d1, const Digraph& d2);

VertexDeletion delete_vertex(const Digraph& d, Vertex v);

// Remove s and t; add a fresh vertex r with N+(r) = N+(s) \cap X and
// N-(r) = N-(t) \cap X where X = V \ {s,t}. Survivors of X are relabeled
// order-preservingly to 0..n-3 and r gets label n-2.
Contraction contract_pair(const Digraph& d, Vertex s, Vertex t);

DegreeSummary degree_summary(const Digraph& d);

}  // namespace ddpc
