#include "ddpc/exact.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "ddpc/errors.hpp"

namespace ddpc {

const char* to_string(CoverabilityVerdict v) {
  switch (v) {
    case CoverabilityVerdict::ProvenTrue: return "proven-true";
    case CoverabilityVerdict::ProvenFalse: return "proven-false";
    case CoverabilityVerdict::SampledTrue: return "sampled-true";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Depth-first search over partial path systems. Paths grow one arc at a
// time; a move onto a designated sink finishes its path. Always extends the
// path with the fewest legal moves, vertices in ascending order.
struct Searcher {
  const Digraph& d;
  const CoverSpec& spec;
  int n, k;
  std::vector<Mask> out, in;
  Mask full = 0, sink_mask = 0;
  bool one_to_one = false, one_to_many = false, paired = false;
  Vertex oto_t = -1;

  std::vector<DiPath> paths;
  std::vector<char> finished;
  Mask used = 0;       // all path vertices; excludes t for one-to-one
  bool direct_st = false;  // one-to-one: the arc path [s,t] already used

  explicit Searcher(const Digraph& dd, const CoverSpec& sp) : d(dd), spec(sp) {
    n = d.order();
    k = spec.k;
    out.assign(n, 0);
    in.assign(n, 0);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : d.out_neighbors(u)) out[u] |= bit(v);
      for (Vertex v : d.in_neighbors(u)) in[u] |= bit(v);
    }
    full = n == 64 ? ~Mask{0} : (bit(n) - 1);
    for (Vertex t : spec.sinks) sink_mask |= bit(t);
    one_to_one = spec.kind == CoverKind::OneToOne;
    one_to_many = spec.kind == CoverKind::OneToMany;
    paired = spec.kind == CoverKind::PairedMTM;
    if (one_to_one) oto_t = spec.sinks[0];

    finished.assign(k, 0);
    paths.resize(k);
    if (one_to_one || one_to_many) {
      Vertex s = spec.sources[0];
      for (auto& p : paths) p = {s};
      used = bit(s);
    } else {
      for (int i = 0; i < k; ++i) {
        paths[i] = {spec.sources[i]};
        used |= bit(spec.sources[i]);
      }
    }
  }

  // Vertices a path may still traverse as interior steps.
  Mask extendable() const {
    Mask m = full & ~used & ~sink_mask;
    if (one_to_one) m &= ~bit(oto_t);
    return m;
  }

  Mask finish_targets(int i) const {
    if (one_to_one) return bit(oto_t);
    if (paired) return bit(spec.sinks[i]) & ~used;
    return sink_mask & ~used;  // unpaired MTM and one-to-many
  }

  Mask moves(int i) const {
    Vertex h = paths[i].back();
    Mask ext = out[h] & extendable();
    Mask fin = out[h] & finish_targets(i);
    if (one_to_one && paths[i].size() == 1 && direct_st) fin &= ~bit(oto_t);
    return ext | fin;
  }

  // Paths that have not moved from a shared source are interchangeable;
  // only the first of them branches.
  bool symmetric_duplicate(int i) const {
    if (!(one_to_one || one_to_many) || paths[i].size() != 1) return false;
    for (int j = 0; j < i; ++j)
      if (!finished[j] && paths[j].size() == 1) return true;
    return false;
  }

  Mask reach_from(Mask seeds, Mask allowed) const {
    Mask reached = seeds;
    Mask frontier = seeds;
    while (frontier) {
      Mask next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= out[v] & allowed & ~reached;
      }
      reached |= next;
      frontier = next;
    }
    return reached;
  }

  bool prune() const {
    Mask heads = 0;
    for (int i = 0; i < k; ++i)
      if (!finished[i]) heads |= bit(paths[i].back());
    Mask ext = extendable();
    Mask reach = reach_from(heads, ext);

    // Every uncovered interior vertex must be reachable from some head.
    Mask uncovered_interior = ext;
    if ((uncovered_interior & ~reach) != 0) return true;

    // Every unmatched sink must be a terminal move from some reached vertex.
    Mask want = 0;
    if (one_to_one) {
      if ((used | bit(oto_t)) != full && heads == 0) return true;
      want = bit(oto_t);
    } else {
      want = sink_mask & ~used;
    }
    Mask hit = 0;
    for (Mask r = reach; r;) {
      int v = std::countr_zero(r);
      r &= r - 1;
      hit |= out[v] & want;
    }
    if ((want & ~hit) != 0 && want != 0) {
      // one-to-one allows t to be "wanted" while every path is finished
      if (!(one_to_one && heads == 0)) return true;
    }

    // Each unfinished path must reach one of its own finish targets.
    for (int i = 0; i < k; ++i) {
      if (finished[i]) continue;
      Mask r = reach_from(bit(paths[i].back()), ext);
      Mask tgt = finish_targets(i);
      bool ok = false;
      for (Mask q = r; q && !ok;) {
        int v = std::countr_zero(q);
        q &= q - 1;
        if (out[v] & tgt) ok = true;
      }
      if (!ok) return true;
    }
    return false;
  }

  bool covered() const {
    Mask all = used;
    if (one_to_one) all |= bit(oto_t);
    return all == full;
  }

  bool solve() {
    int best = -1;
    int best_count = n + 1;
    bool any_unfinished = false;
    for (int i = 0; i < k; ++i) {
      if (finished[i]) continue;
      any_unfinished = true;
      if (symmetric_duplicate(i)) continue;
      int c = std::popcount(moves(i));
      if (c < best_count) {
        best_count = c;
        best = i;
      }
    }
    if (!any_unfinished) return covered();
    if (best == -1 || best_count == 0) return false;
    if (prune()) return false;

    Mask mv = moves(best);
    Mask fin = finish_targets(best);
    while (mv) {
      int v = std::countr_zero(mv);
      mv &= mv - 1;
      bool is_finish = (fin >> v) & 1;
      paths[best].push_back(v);
      bool took_direct = false;
      if (is_finish) {
        finished[best] = 1;
        if (one_to_one && paths[best].size() == 2) {
          direct_st = true;
          took_direct = true;
        }
        if (!one_to_one) used |= bit(v);
      } else {
        used |= bit(v);
      }
      if (solve()) return true;
      if (is_finish) {
        finished[best] = 0;
        if (took_direct) direct_st = false;
        if (!one_to_one) used &= ~bit(v);
      } else {
        used &= ~bit(v);
      }
      paths[best].pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<PathCover> find_cover_exact(const Digraph& d, const CoverSpec& spec) {
  auto bad = validate_spec(d, spec);
  DDPC_REQUIRE(bad.empty(), "invalid cover spec: " + bad.front());
  DDPC_REQUIRE(d.order() <= 64, "exact solver supports order <= 64");
  Searcher searcher(d, spec);
  if (!searcher.solve()) return std::nullopt;
  PathCover cover{searcher.paths};
  DDPC_ENSURE(verify_cover(d, spec, cover).accepted,
              "exact solver produced a cover verify_cover rejects");
  return cover;
}

bool exists_cover(const Digraph& d, const CoverSpec& spec) {
  return find_cover_exact(d, spec).has_value();
}

std::optional<DiPath> find_hamiltonian_path(const Digraph& d, Vertex s, Vertex t) {
  DDPC_REQUIRE(s != t, "find_hamiltonian_path requires s != t");
  CoverSpec spec{CoverKind::OneToOne, 1, {s}, {t}};
  auto cover = find_cover_exact(d, spec);
  if (!cover) return std::nullopt;
  return cover->paths[0];
}

namespace {

// Number of admissible (S,T) choices, clamped at cap+1 to avoid overflow.
std::uint64_t capped_choice_count(const Digraph& d, CoverKind kind, int k,
                                  std::uint64_t cap) {
  const std::uint64_t lim = cap + 1;
  auto mul = [&](std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > lim / b) return lim;
    return std::min(lim, a * b);
  };
  auto choose = [&](int m, int r) {
    std::uint64_t c = 1;
    for (int i = 0; i < r; ++i) {
      c = mul(c, static_cast<std::uint64_t>(m - i));
      c /= static_cast<std::uint64_t>(i + 1);
      if (c >= lim) return lim;
    }
    return c;
  };
  auto falling = [&](int m, int r) {
    std::uint64_t c = 1;
    for (int i = 0; i < r; ++i) c = mul(c, static_cast<std::uint64_t>(m - i));
    return c;
  };
  int n = d.order();
  switch (kind) {
    case CoverKind::UnpairedMTM:
      return mul(choose(n, k), choose(n - k, k));
    case CoverKind::PairedMTM:
      return mul(choose(n, k), falling(n - k, k));
    case CoverKind::OneToMany:
      return mul(static_cast<std::uint64_t>(n), choose(n - 1, k));
    case CoverKind::OneToOne:
      return falling(n, 2);
  }
  return 0;
}

// Enumerates ascending k-subsets of `pool`, invoking fn on each.
template <typename Fn>
bool for_each_subset(const std::vector<Vertex>& pool, int k, Fn&& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  int m = static_cast<int>(pool.size());
  if (k > m) return true;
  while (true) {
    std::vector<Vertex> sub(k);
    for (int i = 0; i < k; ++i) sub[i] = pool[idx[i]];
    if (!fn(sub)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <typename Fn>
bool for_each_tuple(const std::vector<Vertex>& pool, int k, Fn&& fn) {
  std::vector<Vertex> tup;
  std::vector<char> taken(pool.size(), 0);
  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(tup.size()) == k) return fn(tup);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (taken[i]) continue;
      taken[i] = 1;
      tup.push_back(pool[i]);
      if (!self(self)) return false;
      tup.pop_back();
      taken[i] = 0;
    }
    return true;
  };
  return rec(rec);
}

std::vector<Vertex> complement(int n, const std::vector<Vertex>& s) {
  std::vector<char> in_s(n, 0);
  for (Vertex v : s) in_s[v] = 1;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (!in_s[v]) rest.push_back(v);
  return rest;
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t m) {
  return rng() % m;
}

std::vector<Vertex> random_subset(std::mt19937_64& rng, std::vector<Vertex> pool,
                                  int k, bool sorted) {
  for (int i = 0; i < k; ++i) {
    std::size_t j = i + rand_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  if (sorted) std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

CoverabilityResult is_k_coverable(const Digraph& d, CoverKind kind, int k,
                                  const SamplingBudget& budget) {
  int n = d.order();
  DDPC_REQUIRE(k >= 1, "k must be at least 1");
  bool mtm = kind == CoverKind::UnpairedMTM || kind == CoverKind::PairedMTM;
  if (mtm)
    DDPC_REQUIRE(n >= 2 * k, "many-to-many coverability needs order >= 2k");
  else
    DDPC_REQUIRE(n >= k + 1, "one-to-X coverability needs order >= k+1");
  int sinks = kind == CoverKind::OneToOne ? 1 : k;

  CoverabilityResult res{CoverabilityVerdict::ProvenTrue, std::nullopt, 0, false};
  auto check = [&](std::vector<Vertex> S, std::vector<Vertex> T) {
    CoverSpec spec{kind, k, std::move(S), std::move(T)};
    ++res.choices_checked;
    if (!exists_cover(d, spec)) {
      res.verdict = CoverabilityVerdict::ProvenFalse;
      res.counterexample = std::move(spec);
      return false;
    }
    return true;
  };

  std::uint64_t count = capped_choice_count(d, kind, k, budget.exhaustive_cap);
  if (count <= budget.exhaustive_cap) {
    res.exhaustive = true;
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    int src = mtm ? k : 1;
    bool done = for_each_subset(all, src, [&](const std::vector<Vertex>& S) {
      auto rest = complement(n, S);
      if (kind == CoverKind::PairedMTM)
        return for_each_tuple(rest, sinks,
                              [&](const std::vector<Vertex>& T) { return check(S, T); });
      return for_each_subset(rest, sinks,
                             [&](const std::vector<Vertex>& T) { return check(S, T); });
    });
    (void)done;
    return res;
  }

  std::mt19937_64 rng(budget.seed);
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  for (int i = 0; i < budget.samples; ++i) {
    int src = mtm ? k : 1;
    auto S = random_subset(rng, all, src, true);
    auto T = random_subset(rng, complement(n, S), sinks,
                           kind != CoverKind::PairedMTM);
    if (!check(std::move(S), std::move(T))) return res;
  }
  res.verdict = CoverabilityVerdict::SampledTrue;
  return res;
}

}  // namespace ddpc
