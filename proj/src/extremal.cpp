#include "ddpc/extremal.hpp"

#include <algorithm>

#include "ddpc/errors.hpp"

namespace ddpc {

const char* to_string(ExtremalFamily family) {
  switch (family) {
    case ExtremalFamily::UnpairedSharpEven: return "unpaired-sharp-even";
    case ExtremalFamily::UnpairedSharpOdd: return "unpaired-sharp-odd";
    case ExtremalFamily::TightSharpOddK: return "tight-sharp-odd-k";
    case ExtremalFamily::TightSharpEvenK: return "tight-sharp-even-k";
    case ExtremalFamily::Paired2Figure1: return "paired2-figure1";
    case ExtremalFamily::OneToManySharpOdd: return "one-to-many-sharp-odd";
    case ExtremalFamily::OneToManySharpEven: return "one-to-many-sharp-even";
    case ExtremalFamily::OneToOneSharpOdd: return "one-to-one-sharp-odd";
    case ExtremalFamily::OneToOneSharpEven: return "one-to-one-sharp-even";
  }
  return "?";
}

ExtremalFamily extremal_family_from_string(const std::string& name) {
  static const ExtremalFamily all[] = {
      ExtremalFamily::UnpairedSharpEven,  ExtremalFamily::UnpairedSharpOdd,
      ExtremalFamily::TightSharpOddK,     ExtremalFamily::TightSharpEvenK,
      ExtremalFamily::Paired2Figure1,     ExtremalFamily::OneToManySharpOdd,
      ExtremalFamily::OneToManySharpEven, ExtremalFamily::OneToOneSharpOdd,
      ExtremalFamily::OneToOneSharpEven};
  for (auto f : all)
    if (name == to_string(f)) return f;
  throw precondition_error("unknown extremal family: " + name);
}

namespace {

int ceil_div2(int x) { return (x + 1) / 2; }

std::vector<Vertex> iota_range(int lo, int hi) {  // [lo, hi)
  std::vector<Vertex> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

std::vector<Vertex> concat(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

ExtremalWitness gen_unpaired_sharp(int n, int k) {
  DDPC_REQUIRE(k >= 1, "gen_unpaired_sharp requires k >= 1");
  ExtremalWitness w;
  w.family = (n + k) % 2 == 0 ? ExtremalFamily::UnpairedSharpEven
                              : ExtremalFamily::UnpairedSharpOdd;
  if ((n + k) % 2 == 0) {
    DDPC_REQUIRE(n >= 3 * k, "gen_unpaired_sharp (n+k even) requires n >= 3k");
    int a = (n + k) / 2;
    w.graph = glued_cliques(a, a, k);
    w.spec = {CoverKind::UnpairedMTM, k, iota_range(0, k), iota_range(a - k, a)};
    if (n == 3 * k)
      w.note = "n = 3k is outside the proposition's stated range n >= 3k+1";
  } else {
    DDPC_REQUIRE(n >= 3 * k + 1, "gen_unpaired_sharp (n+k odd) requires n >= 3k+1");
    int a = (n + k - 1) / 2;
    w.graph = full_join(complete_digraph(a), empty_digraph(n - a));
    w.spec = {CoverKind::UnpairedMTM, k, iota_range(0, k), iota_range(k, 2 * k)};
  }
  w.claimed_min_semi_degree = ceil_div2(n + k) - 1;
  return w;
}

ExtremalWitness gen_tight_sharp(int k) {
  DDPC_REQUIRE(k >= 2, "gen_tight_sharp requires k >= 2");
  const int n = 2 * k;
  ExtremalWitness w;
  if (k % 2 == 1) {
    w.family = ExtremalFamily::TightSharpOddK;
    int a = (3 * k - 1) / 2, c = k - 1;
    int priv = a - c;  // (k+1)/2
    w.graph = glued_cliques(a, a, c);
    int half = (k - 1) / 2;
    w.spec = {CoverKind::UnpairedMTM, k,
              concat(iota_range(0, priv), iota_range(priv, priv + half)),
              concat(iota_range(a, n), iota_range(priv + half, a))};
  } else {
    w.family = ExtremalFamily::TightSharpEvenK;
    int a = 3 * k / 2 - 1, c = k - 2;
    int priv = a - c;  // k/2 + 1
    w.graph = glued_cliques(a, a, c);
    int half = k / 2 - 1;
    w.spec = {CoverKind::UnpairedMTM, k,
              concat(iota_range(0, priv), iota_range(priv, priv + half)),
              concat(iota_range(a, n), iota_range(priv + half, a))};
    if (k == 2)
      w.note = "overlap k-2 = 0: the two cliques are disjoint";
  }
  w.claimed_min_semi_degree = ceil_div2(3 * k) - 2;
  return w;
}

ExtremalWitness gen_paired2_figure1(int n, int m) {
  DDPC_REQUIRE(n >= 9, "gen_paired2_figure1 requires n >= 9");
  DDPC_REQUIRE(m >= 3 && n - m - 3 >= 3,
               "gen_paired2_figure1 requires 3 <= m <= n-6");
  // Layout: A\{z} = 0..m-2, z = m-1, B\{z} = m..n-5, then s1,s2,t1,t2.
  Vertex z = m - 1;
  Vertex s1 = n - 4, s2 = n - 3, t1 = n - 2, t2 = n - 1;
  std::vector<Vertex> block_a = iota_range(0, m - 1);
  std::vector<Vertex> block_b = iota_range(m, n - 4);
  std::vector<Vertex> sblk = {s1, s2, t1, t2};

  std::vector<Arc> arcs;
  auto clique = [&](const std::vector<Vertex>& vs) {
    for (Vertex u : vs)
      for (Vertex v : vs)
        if (u != v) arcs.emplace_back(u, v);
  };
  clique(concat(block_a, {z}));
  clique(concat(block_b, {z}));
  for (Vertex u : sblk)
    for (Vertex v : sblk) {
      if (u == v) continue;
      if ((u == s1 && v == t1) || (u == s2 && v == t2)) continue;
      arcs.emplace_back(u, v);
    }
  for (Vertex u : sblk) {
    arcs.emplace_back(z, u);
    arcs.emplace_back(u, z);
  }
  for (Vertex u : block_a) {
    arcs.emplace_back(s1, u);
    arcs.emplace_back(u, s1);
    arcs.emplace_back(t2, u);
    arcs.emplace_back(u, t2);
    arcs.emplace_back(t1, u);
    arcs.emplace_back(u, s2);
  }
  for (Vertex u : block_b) {
    arcs.emplace_back(t1, u);
    arcs.emplace_back(u, t1);
    arcs.emplace_back(s2, u);
    arcs.emplace_back(u, s2);
    arcs.emplace_back(t2, u);
    arcs.emplace_back(u, s1);
  }

  ExtremalWitness w;
  w.family = ExtremalFamily::Paired2Figure1;
  w.graph = Digraph(n, arcs);
  w.spec = {CoverKind::PairedMTM, 2, {s1, s2}, {t1, t2}};
  w.claimed_ore_min = n + 1;
  w.claimed_min_semi_degree = std::min(m + 2, n - m - 1);
  return w;
}

ExtremalWitness gen_one_to_many_sharp(int n, int k) {
  DDPC_REQUIRE(k >= 2, "gen_one_to_many_sharp requires k >= 2");
  DDPC_REQUIRE(n >= k + 2, "gen_one_to_many_sharp requires n >= k+2");
  ExtremalWitness w;
  if ((n + k) % 2 == 1) {
    w.family = ExtremalFamily::OneToManySharpOdd;
    int a = (n + k - 1) / 2, c = k - 1;
    w.graph = glued_cliques(a, a, c);
    // s in the A-private block, T the k lowest labels of B.
    w.spec = {CoverKind::OneToMany, k, {0}, iota_range(a - c, a - c + k)};
  } else {
    w.family = ExtremalFamily::OneToManySharpEven;
    int a = (n + k) / 2 - 1;
    w.graph = full_join(complete_digraph(a), empty_digraph(n - a));
    w.spec = {CoverKind::OneToMany, k, {a}, iota_range(0, k)};
  }
  w.claimed_min_semi_degree = ceil_div2(n + k - 1) - 1;
  return w;
}

ExtremalWitness gen_one_to_one_sharp(int n, int k) {
  DDPC_REQUIRE(k >= 2, "gen_one_to_one_sharp requires k >= 2");
  DDPC_REQUIRE(n >= k + 1, "gen_one_to_one_sharp requires n >= k+1");
  ExtremalWitness w;
  int a, c;
  if ((n + k) % 2 == 1) {
    w.family = ExtremalFamily::OneToOneSharpOdd;
    a = (n + k - 1) / 2;
    c = k - 1;
  } else {
    w.family = ExtremalFamily::OneToOneSharpEven;
    a = (n + k) / 2 - 1;
    c = k - 2;
    if (c == 0) w.note = "overlap k-2 = 0: the two cliques are disjoint";
  }
  w.graph = glued_cliques(a, a, c);
  w.spec = {CoverKind::OneToOne, k, {0}, {n - 1}};
  w.claimed_min_semi_degree = ceil_div2(n + k) - 2;
  return w;
}

ExtremalWitness generate_extremal(ExtremalFamily family, int a, int b) {
  switch (family) {
    case ExtremalFamily::UnpairedSharpEven:
    case ExtremalFamily::UnpairedSharpOdd: {
      auto w = gen_unpaired_sharp(a, b);
      DDPC_REQUIRE(w.family == family, "parity of n+k selects the other family");
      return w;
    }
    case ExtremalFamily::TightSharpOddK:
    case ExtremalFamily::TightSharpEvenK: {
      auto w = gen_tight_sharp(b);
      DDPC_REQUIRE(w.family == family, "parity of k selects the other family");
      return w;
    }
    case ExtremalFamily::Paired2Figure1:
      return gen_paired2_figure1(a, b);
    case ExtremalFamily::OneToManySharpOdd:
    case ExtremalFamily::OneToManySharpEven: {
      auto w = gen_one_to_many_sharp(a, b);
      DDPC_REQUIRE(w.family == family, "parity of n+k selects the other family");
      return w;
    }
    case ExtremalFamily::OneToOneSharpOdd:
    case ExtremalFamily::OneToOneSharpEven: {
      auto w = gen_one_to_one_sharp(a, b);
      DDPC_REQUIRE(w.family == family, "parity of n+k selects the other family");
      return w;
    }
  }
  throw precondition_error("unknown extremal family");
}

namespace {

// Glued cliques of order n with minimum semi-degree exactly `delta`;
// collapses to the complete digraph when delta = n-1.
Digraph glued_with_delta(int n, int delta) {
  DDPC_REQUIRE(delta <= n - 1, "delta exceeds n-1");
  int a = delta + 1;
  int c = 2 * a - n;
  DDPC_REQUIRE(c >= 0 && c <= a, "no glued-clique instance with this delta");
  return glued_cliques(a, a, c);
}

}  // namespace

HypothesisSide hypothesis_side(const ExtremalWitness& witness) {
  const int n = witness.graph.order();
  const int k = witness.spec.k;
  switch (witness.family) {
    case ExtremalFamily::UnpairedSharpEven:
    case ExtremalFamily::UnpairedSharpOdd: {
      int threshold = ceil_div2(n + k);
      return {glued_with_delta(n, threshold),
              {CoverKind::UnpairedMTM, k, iota_range(0, k), iota_range(n - k, n)}};
    }
    case ExtremalFamily::TightSharpOddK:
    case ExtremalFamily::TightSharpEvenK: {
      int threshold = ceil_div2(3 * k) - 1;
      return {glued_with_delta(n, threshold),
              {CoverKind::UnpairedMTM, k, iota_range(0, k), iota_range(k, 2 * k)}};
    }
    case ExtremalFamily::Paired2Figure1:
      return {complete_digraph(n), {CoverKind::PairedMTM, 2, {0, 1}, {2, 3}}};
    case ExtremalFamily::OneToManySharpOdd:
    case ExtremalFamily::OneToManySharpEven: {
      DDPC_REQUIRE(n >= 3 * k, "theorem-side one-to-many instance needs n >= 3k");
      int threshold = ceil_div2(n + k);
      return {glued_with_delta(n, threshold),
              {CoverKind::OneToMany, k, {0}, iota_range(n - k, n)}};
    }
    case ExtremalFamily::OneToOneSharpOdd:
    case ExtremalFamily::OneToOneSharpEven: {
      int threshold = ceil_div2(n + k - 1);
      return {glued_with_delta(n, threshold),
              {CoverKind::OneToOne, k, {0}, {n - 1}}};
    }
  }
  throw precondition_error("unknown extremal family");
}

}  // namespace ddpc
