#include "ddpc/digraph.hpp"

#include <algorithm>
#include <string>

#include "ddpc/errors.hpp"

namespace ddpc {

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : n_(n) {
  DDPC_REQUIRE(n >= 0, "digraph order must be non-negative");
  out_.resize(n_);
  in_.resize(n_);
  for (const auto& [u, v] : arcs) {
    DDPC_REQUIRE(u >= 0 && u < n_ && v >= 0 && v < n_,
                 "arc endpoint out of range");
    DDPC_REQUIRE(u != v, "loops are not allowed");
    out_[u].push_back(v);
  }
  m_ = 0;
  for (Vertex u = 0; u < n_; ++u) {
    auto& row = out_[u];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    m_ += row.size();
    for (Vertex v : row) in_[v].push_back(u);
  }
  for (auto& row : in_) std::sort(row.begin(), row.end());
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  return result;
}

Digraph complete_digraph(int n) {
  DDPC_REQUIRE(n >= 0, "order must be non-negative");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) arcs.emplace_back(u, v);
  return Digraph(n, arcs);
}

Digraph complete_bipartite_digraph(int a, int b) {
  DDPC_REQUIRE(a >= 0 && b >= 0, "part sizes must be non-negative");
  std::vector<Arc> arcs;
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = a; y < a + b; ++y) {
      arcs.emplace_back(x, y);
      arcs.emplace_back(y, x);
    }
  return Digraph(a + b, arcs);
}

Digraph empty_digraph(int n) { return Digraph(n, {}); }

Digraph glued_cliques(int a, int b, int overlap) {
  DDPC_REQUIRE(a >= 0 && b >= 0, "clique sizes must be non-negative");
  DDPC_REQUIRE(overlap >= 0 && overlap <= std::min(a, b),
               "overlap must satisfy 0 <= overlap <= min(a, b)");
  int n = a + b - overlap;
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < a; ++v)
      if (u != v) arcs.emplace_back(u, v);
  for (Vertex u = a - overlap; u < n; ++u)
    for (Vertex v = a - overlap; v < n; ++v)
      if (u != v) arcs.emplace_back(u, v);
  return Digraph(n, arcs);
}

Digraph full_join(const Digraph& d1, const Digraph& d2) {
  int n1 = d1.order(), n2 = d2.order();
  std::vector<Arc> arcs = d1.arcs();
  for (const auto& [u, v] : d2.arcs()) arcs.emplace_back(u + n1, v + n1);
  for (Vertex x = 0; x < n1; ++x)
    for (Vertex y = n1; y < n1 + n2; ++y) {
      arcs.emplace_back(x, y);
      arcs.emplace_back(y, x);
    }
  return Digraph(n1 + n2, arcs);
}

VertexDeletion delete_vertex(const Digraph& d, Vertex v) {
  int n = d.order();
  DDPC_REQUIRE(v >= 0 && v < n, "vertex out of range");
  std::vector<int> old_to_new(n, -1);
  for (Vertex u = 0; u < n; ++u)
    if (u != v) old_to_new[u] = u < v ? u : u - 1;
  std::vector<Arc> arcs;
  for (const auto& [x, y] : d.arcs())
    if (x != v && y != v) arcs.emplace_back(old_to_new[x], old_to_new[y]);
  return {Digraph(n - 1, arcs), std::move(old_to_new)};
}

Contraction contract_pair(const Digraph& d, Vertex s, Vertex t) {
  int n = d.order();
  DDPC_REQUIRE(s >= 0 && s < n && t >= 0 && t < n, "vertex out of range");
  DDPC_REQUIRE(s != t, "contract_pair requires s != t");
  DDPC_REQUIRE(n >= 3, "contract_pair needs a vertex besides s and t");
  std::vector<int> old_to_new(n, -1);
  int next = 0;
  for (Vertex u = 0; u < n; ++u)
    if (u != s && u != t) old_to_new[u] = next++;
  Vertex r = next;  // == n - 2
  std::vector<Arc> arcs;
  for (const auto& [x, y] : d.arcs())
    if (x != s && x != t && y != s && y != t)
      arcs.emplace_back(old_to_new[x], old_to_new[y]);
  for (Vertex v : d.out_neighbors(s))
    if (v != t) arcs.emplace_back(r, old_to_new[v]);
  for (Vertex u : d.in_neighbors(t))
    if (u != s) arcs.emplace_back(old_to_new[u], r);
  return {Digraph(n - 1, arcs), r, std::move(old_to_new)};
}

DegreeSummary degree_summary(const Digraph& d) {
  int n = d.order();
  DegreeSummary s;
  s.out_degree.resize(n);
  s.in_degree.resize(n);
  s.min_semi_degree = 0;
  for (Vertex v = 0; v < n; ++v) {
    s.out_degree[v] = d.out_degree(v);
    s.in_degree[v] = d.in_degree(v);
  }
  if (n > 0) {
    s.min_semi_degree = n;  // upper bound, tightened below
    for (Vertex v = 0; v < n; ++v)
      s.min_semi_degree =
          std::min(s.min_semi_degree, std::min(s.out_degree[v], s.in_degree[v]));
  }
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      if (x == y || d.has_arc(x, y)) continue;
      int sum = s.out_degree[x] + s.in_degree[y];
      if (!s.ore_min || sum < *s.ore_min) s.ore_min = sum;
    }
  return s;
}

}  // namespace ddpc
