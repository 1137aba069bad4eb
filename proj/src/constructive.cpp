#include "ddpc/constructive.hpp"

#include <algorithm>

#include "ddpc/errors.hpp"
#include "ddpc/exact.hpp"

namespace ddpc {

namespace {

int ceil_div2(int x) { return (x + 1) / 2; }

// Applies a relabeling map to a vertex list; every image must exist.
std::vector<Vertex> mapped(const std::vector<Vertex>& vs,
                           const std::vector<int>& old_to_new) {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex v : vs) {
    DDPC_ENSURE(old_to_new[v] >= 0, "relabel map lost a needed vertex");
    out.push_back(old_to_new[v]);
  }
  return out;
}

std::vector<int> invert(const std::vector<int>& old_to_new, int new_order) {
  std::vector<int> inv(new_order, -1);
  for (std::size_t old = 0; old < old_to_new.size(); ++old)
    if (old_to_new[old] >= 0) inv[old_to_new[old]] = static_cast<int>(old);
  return inv;
}

void check_accepted(const Digraph& d, const CoverSpec& spec,
                    const PathCover& cover, const char* who) {
  auto res = verify_cover(d, spec, cover);
  DDPC_ENSURE(res.accepted, std::string(who) + " built a cover verify_cover rejects: " + res.detail);
}

}  // namespace

PathCover unpaired_mtm_cover(const Digraph& d, const std::vector<Vertex>& S,
                             const std::vector<Vertex>& T, SolveStats* stats) {
  const int n = d.order();
  const int k = static_cast<int>(S.size());
  CoverSpec spec{CoverKind::UnpairedMTM, k, S, T};
  {
    auto bad = validate_spec(d, spec);
    DDPC_REQUIRE(bad.empty(), "unpaired_mtm_cover: " + (bad.empty() ? "" : bad.front()));
  }
  DDPC_REQUIRE(n >= 3 * k, "unpaired_mtm_cover requires n >= 3k");
  DDPC_REQUIRE(degree_summary(d).min_semi_degree >= ceil_div2(n + k),
               "unpaired_mtm_cover requires delta^0 >= ceil((n+k)/2)");

  PathCover cover;
  if (k == 1) {
    // delta^0 >= ceil((n+1)/2) forces the Ore bound n+1, so the search
    // cannot miss.
    auto p = find_hamiltonian_path(d, S[0], T[0]);
    DDPC_ENSURE(p.has_value(),
                "no Hamiltonian s-t path despite the degree hypothesis");
    cover.paths = {*p};
  } else {
    Vertex sk = S[k - 1], tk = T[k - 1];
    auto [d2, r, old_to_new] = contract_pair(d, sk, tk);
    if (stats) ++stats->contractions;
    std::vector<Vertex> s1(S.begin(), S.end() - 1), t1(T.begin(), T.end() - 1);
    PathCover sub = unpaired_mtm_cover(d2, mapped(s1, old_to_new),
                                       mapped(t1, old_to_new), stats);
    // Lift back to original labels; r has no preimage and stays -1.
    auto inv = invert(old_to_new, d2.order());
    int host = -1;
    std::size_t r_pos = 0;
    for (std::size_t i = 0; i < sub.paths.size(); ++i) {
      for (Vertex& v : sub.paths[i]) {
        if (v == r) {
          host = static_cast<int>(i);
          v = -1;
        } else {
          v = inv[v];
        }
      }
      if (host == static_cast<int>(i))
        r_pos = std::find(sub.paths[i].begin(), sub.paths[i].end(), -1) -
                sub.paths[i].begin();
    }
    DDPC_ENSURE(host >= 0, "contracted vertex missing from spanning cover");
    const DiPath& hp = sub.paths[host];
    DDPC_ENSURE(r_pos > 0 && r_pos + 1 < hp.size(),
                "contracted vertex is not interior to its path");
    DiPath head(hp.begin(), hp.begin() + r_pos);  // s_host .. r^-
    head.push_back(tk);
    DiPath tail{sk};  // s_k, r^+ ..
    tail.insert(tail.end(), hp.begin() + r_pos + 1, hp.end());
    cover.paths = sub.paths;
    cover.paths[host] = std::move(head);
    cover.paths.push_back(std::move(tail));
  }
  check_accepted(d, spec, cover, "unpaired_mtm_cover");
  return cover;
}

PathCover unpaired_mtm_cover_tight(const Digraph& d, const std::vector<Vertex>& S,
                                   const std::vector<Vertex>& T) {
  const int n = d.order();
  const int k = static_cast<int>(S.size());
  CoverSpec spec{CoverKind::UnpairedMTM, k, S, T};
  {
    auto bad = validate_spec(d, spec);
    DDPC_REQUIRE(bad.empty(),
                 "unpaired_mtm_cover_tight: " + (bad.empty() ? "" : bad.front()));
  }
  DDPC_REQUIRE(n == 2 * k, "unpaired_mtm_cover_tight requires n = 2k");
  DDPC_REQUIRE(degree_summary(d).min_semi_degree >= ceil_div2(3 * k) - 1,
               "unpaired_mtm_cover_tight requires delta^0 >= ceil(3k/2)-1");

  // Kuhn-style augmenting paths over the S->T arc set. The degree
  // hypothesis guarantees Hall's condition, so the matching is perfect.
  std::vector<int> match_t(k, -1), match_s(k, -1);
  std::vector<int> sink_index(n, -1);
  for (int j = 0; j < k; ++j) sink_index[T[j]] = j;
  std::vector<char> seen;
  auto augment = [&](auto&& self, int i) -> bool {
    for (Vertex v : d.out_neighbors(S[i])) {
      int j = sink_index[v];
      if (j < 0 || seen[j]) continue;
      seen[j] = 1;
      if (match_t[j] < 0 || self(self, match_t[j])) {
        match_t[j] = i;
        match_s[i] = j;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < k; ++i) {
    seen.assign(k, 0);
    DDPC_ENSURE(augment(augment, i),
                "deficient S->T matching despite the degree hypothesis");
  }

  PathCover cover;
  for (int i = 0; i < k; ++i) cover.paths.push_back({S[i], T[match_s[i]]});
  check_accepted(d, spec, cover, "unpaired_mtm_cover_tight");
  return cover;
}

PathCover balanced_bipartite_cover(int m, const std::vector<Vertex>& S,
                                   const std::vector<Vertex>& T) {
  DDPC_REQUIRE(m >= 2, "balanced_bipartite_cover requires m >= 2");
  Digraph d = complete_bipartite_digraph(m, m);
  CoverSpec spec{CoverKind::UnpairedMTM, m, S, T};
  {
    auto bad = validate_spec(d, spec);
    DDPC_REQUIRE(bad.empty(),
                 "balanced_bipartite_cover: " + (bad.empty() ? "" : bad.front()));
  }

  auto part = [&](const std::vector<Vertex>& vs, bool in_x) {
    std::vector<Vertex> r;
    for (Vertex v : vs)
      if ((v < m) == in_x) r.push_back(v);
    std::sort(r.begin(), r.end());
    return r;
  };
  auto sx = part(S, true), sy = part(S, false);
  auto tx = part(T, true), ty = part(T, false);
  DDPC_ENSURE(sx.size() == ty.size() && sy.size() == tx.size(),
              "counting identity |S_X| = |T_Y| failed");

  std::vector<Vertex> target(2 * m, -1);
  for (std::size_t i = 0; i < sx.size(); ++i) target[sx[i]] = ty[i];
  for (std::size_t i = 0; i < sy.size(); ++i) target[sy[i]] = tx[i];

  PathCover cover;
  for (Vertex s : S) cover.paths.push_back({s, target[s]});
  check_accepted(d, spec, cover, "balanced_bipartite_cover");
  return cover;
}

PathCover paired_two_cover(const Digraph& d, Vertex s1, Vertex s2, Vertex t1,
                           Vertex t2, SolveStats* stats) {
  (void)stats;
  CoverSpec spec{CoverKind::PairedMTM, 2, {s1, s2}, {t1, t2}};
  {
    auto bad = validate_spec(d, spec);
    DDPC_REQUIRE(bad.empty(),
                 "paired_two_cover: " + (bad.empty() ? "" : bad.front()));
  }
  const int n = d.order();
  auto deg = degree_summary(d);
  DDPC_REQUIRE(!deg.ore_min || *deg.ore_min >= n + 2,
               "paired_two_cover requires d+(x)+d-(y) >= n+2 on non-arcs");

  auto [d1, w, old_to_new] = contract_pair(d, s2, t1);
  // The contracted digraph satisfies the Ore bound n1+1, so it is
  // Hamiltonian connected.
  auto p = find_hamiltonian_path(d1, old_to_new[s1], old_to_new[t2]);
  DDPC_ENSURE(p.has_value(),
              "contracted digraph lost Hamiltonian connectivity");
  auto inv = invert(old_to_new, d1.order());
  std::size_t w_pos = std::find(p->begin(), p->end(), w) - p->begin();
  DDPC_ENSURE(w_pos > 0 && w_pos + 1 < p->size(),
              "merge vertex is not interior to the Hamiltonian path");

  DiPath p1, p2{s2};
  for (std::size_t i = 0; i < w_pos; ++i) p1.push_back(inv[(*p)[i]]);
  p1.push_back(t1);
  for (std::size_t i = w_pos + 1; i < p->size(); ++i) p2.push_back(inv[(*p)[i]]);
  PathCover cover{{p1, p2}};
  check_accepted(d, spec, cover, "paired_two_cover");
  return cover;
}

PathCover one_to_many_cover(const Digraph& d, Vertex s,
                            const std::vector<Vertex>& T, SolveStats* stats) {
  const int n = d.order();
  const int k = static_cast<int>(T.size());
  CoverSpec spec{CoverKind::OneToMany, k, {s}, T};
  {
    auto bad = validate_spec(d, spec);
    DDPC_REQUIRE(bad.empty(),
                 "one_to_many_cover: " + (bad.empty() ? "" : bad.front()));
  }
  DDPC_REQUIRE(k >= 2, "one_to_many_cover requires k >= 2");
  DDPC_REQUIRE(n >= 3 * k, "one_to_many_cover requires n >= 3k");
  DDPC_REQUIRE(degree_summary(d).min_semi_degree >= ceil_div2(n + k),
               "one_to_many_cover requires delta^0 >= ceil((n+k)/2)");

  // d+(s) >= 2k leaves at least k out-neighbors outside T.
  std::vector<Vertex> extra;
  for (Vertex v : d.out_neighbors(s)) {
    if (std::find(T.begin(), T.end(), v) != T.end()) continue;
    extra.push_back(v);
    if (static_cast<int>(extra.size()) == k - 1) break;
  }
  DDPC_ENSURE(static_cast<int>(extra.size()) == k - 1,
              "too few admissible out-neighbors of s");

  std::vector<Vertex> sources{s};
  sources.insert(sources.end(), extra.begin(), extra.end());
  PathCover mtm = unpaired_mtm_cover(d, sources, T, stats);

  PathCover cover;
  cover.paths.push_back(mtm.paths[0]);
  for (int i = 1; i < k; ++i) {
    DiPath p{s};
    p.insert(p.end(), mtm.paths[i].begin(), mtm.paths[i].end());
    cover.paths.push_back(std::move(p));
  }
  check_accepted(d, spec, cover, "one_to_many_cover");
  return cover;
}

PathCover one_to_one_cover(const Digraph& d, Vertex s, Vertex t, int k,
                           SolveStats* stats) {
  const int n = d.order();
  CoverSpec spec{CoverKind::OneToOne, k, {s}, {t}};
  {
    auto bad = validate_spec(d, spec);
    DDPC_REQUIRE(bad.empty(),
                 "one_to_one_cover: " + (bad.empty() ? "" : bad.front()));
  }
  DDPC_REQUIRE(k >= 2, "one_to_one_cover requires k >= 2");
  DDPC_REQUIRE(n >= k + 1, "one_to_one_cover requires n >= k+1");
  DDPC_REQUIRE(degree_summary(d).min_semi_degree >= ceil_div2(n + k - 1),
               "one_to_one_cover requires delta^0 >= ceil((n+k-1)/2)");

  PathCover cover;
  if (k == 2) {
    if (stats) ++stats->base_claim_calls;
    auto p = find_hamiltonian_path(d, s, t);
    DDPC_ENSURE(p.has_value(),
                "no Hamiltonian s-t path despite the degree hypothesis");
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < p->size(); ++i) pos[(*p)[i]] = static_cast<int>(i);

    // X = predecessors on P of out-neighbors of s, Y = in-neighbors of t.
    std::vector<char> in_x(n, 0), in_y(n, 0);
    for (Vertex v : d.out_neighbors(s)) in_x[(*p)[pos[v] - 1]] = 1;
    for (Vertex u : d.in_neighbors(t)) in_y[u] = 1;
    std::vector<Vertex> xy;
    for (Vertex v = 0; v < n; ++v)
      if (in_x[v] && in_y[v]) xy.push_back(v);
    DDPC_ENSURE(static_cast<int>(xy.size()) >= 2,
                "|X cap Y| < 2 despite the degree hypothesis");
    if (stats)
      stats->min_claim_intersection =
          std::min(stats->min_claim_intersection, static_cast<int>(xy.size()));

    Vertex w = xy.front();
    int j = pos[w];
    DiPath p1{s};  // s, w+, ..., t
    p1.insert(p1.end(), p->begin() + j + 1, p->end());
    DiPath p2(p->begin(), p->begin() + j + 1);  // s, ..., w, t
    p2.push_back(t);
    cover.paths = {p1, p2};
  } else {
    Vertex h = -1;
    for (Vertex v : d.out_neighbors(s))
      if (d.has_arc(v, t)) {
        h = v;
        break;
      }
    DDPC_ENSURE(h >= 0, "N+(s) cap N-(t) empty despite the degree hypothesis");
    if (stats) ++stats->deletions;
    auto [d1, old_to_new] = delete_vertex(d, h);
    PathCover sub =
        one_to_one_cover(d1, old_to_new[s], old_to_new[t], k - 1, stats);
    auto inv = invert(old_to_new, d1.order());
    cover.paths.reserve(k);
    for (auto& p : sub.paths) {
      DiPath lifted;
      lifted.reserve(p.size());
      for (Vertex v : p) lifted.push_back(inv[v]);
      cover.paths.push_back(std::move(lifted));
    }
    cover.paths.push_back({s, h, t});
  }
  check_accepted(d, spec, cover, "one_to_one_cover");
  return cover;
}

}  // namespace ddpc
