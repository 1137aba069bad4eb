#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ddpc/cover.hpp"
#include "ddpc/digraph.hpp"
#include "ddpc/errors.hpp"

using namespace ddpc;

namespace {

Digraph k5() { return complete_digraph(5); }

}  // namespace

TEST_CASE("kind names round-trip") {
  for (auto kind : {CoverKind::UnpairedMTM, CoverKind::PairedMTM,
                    CoverKind::OneToMany, CoverKind::OneToOne})
    CHECK(cover_kind_from_string(to_string(kind)) == kind);
  CHECK_THROWS_AS(cover_kind_from_string("bogus"), precondition_error);
}

TEST_CASE("spec validation") {
  Digraph d = k5();
  CHECK(validate_spec(d, {CoverKind::PairedMTM, 2, {0, 1}, {2, 3}}).empty());
  // Wrong endpoint count.
  CHECK(!validate_spec(d, {CoverKind::PairedMTM, 2, {0}, {2, 3}}).empty());
  // Overlapping S and T.
  CHECK(!validate_spec(d, {CoverKind::UnpairedMTM, 2, {0, 1}, {1, 2}}).empty());
  // Duplicates within S.
  CHECK(!validate_spec(d, {CoverKind::UnpairedMTM, 2, {0, 0}, {1, 2}}).empty());
  // Out of range.
  CHECK(!validate_spec(d, {CoverKind::OneToOne, 2, {0}, {5}}).empty());
  // OneToMany: single source required.
  CHECK(!validate_spec(d, {CoverKind::OneToMany, 2, {0, 1}, {2, 3}}).empty());
  CHECK(validate_spec(d, {CoverKind::OneToMany, 2, {0}, {2, 3}}).empty());
  // OneToOne s = t.
  CHECK(!validate_spec(d, {CoverKind::OneToOne, 2, {0}, {0}}).empty());
  // verify_cover throws on a bad spec.
  CHECK_THROWS_AS(
      verify_cover(d, {CoverKind::PairedMTM, 2, {0}, {2, 3}}, {{{0}}}),
      precondition_error);
}

TEST_CASE("paired many-to-many accept and endpoint discipline") {
  Digraph d = k5();
  CoverSpec spec{CoverKind::PairedMTM, 2, {0, 1}, {2, 3}};
  CHECK(verify_cover(d, spec, {{{0, 4, 2}, {1, 3}}}).accepted);
  // Swapped terminals: fine unpaired, a reject paired.
  PathCover swapped{{{0, 4, 3}, {1, 2}}};
  auto res = verify_cover(d, spec, swapped);
  CHECK(!res.accepted);
  CHECK(res.reason == RejectReason::BadEndpoint);
  CHECK(verify_cover(d, {CoverKind::UnpairedMTM, 2, {0, 1}, {2, 3}}, swapped)
            .accepted);
}

TEST_CASE("structural rejects") {
  Digraph d(5, {{0, 4}, {4, 2}, {1, 3}});
  CoverSpec spec{CoverKind::PairedMTM, 2, {0, 1}, {2, 3}};
  CHECK(verify_cover(d, spec, {{{0, 4, 2}, {1, 3}}}).accepted);

  CHECK(verify_cover(d, spec, {{{0, 4, 2}}}).reason == RejectReason::WrongCount);
  // 4->3 is not an arc.
  CHECK(verify_cover(d, spec, {{{0, 4, 3}, {1, 2}}}).reason ==
        RejectReason::BadArc);
  // Vertex repeat inside one path.
  CHECK(verify_cover(k5(), spec, {{{0, 4, 0, 2}, {1, 3}}}).reason ==
        RejectReason::Overlap);
  // Shared interior vertex.
  CHECK(verify_cover(k5(), spec, {{{0, 4, 2}, {1, 4, 3}}}).reason ==
        RejectReason::Overlap);
  // Missing vertex 4.
  CHECK(verify_cover(k5(), spec, {{{0, 2}, {1, 3}}}).reason ==
        RejectReason::Uncovered);
  // Empty path.
  CHECK(verify_cover(d, spec, {{{}, {1, 3}}}).reason ==
        RejectReason::WrongCount);
  // Out-of-range vertex.
  CHECK(verify_cover(d, spec, {{{0, 9, 2}, {1, 3}}}).reason ==
        RejectReason::BadArc);
}

TEST_CASE("one-to-many shares exactly the source") {
  Digraph d = k5();
  CoverSpec spec{CoverKind::OneToMany, 2, {0}, {3, 4}};
  CHECK(verify_cover(d, spec, {{{0, 1, 3}, {0, 2, 4}}}).accepted);
  // A path not starting at s.
  CHECK(verify_cover(d, spec, {{{0, 1, 3}, {2, 0, 4}}}).reason ==
        RejectReason::BadEndpoint);
  // Terminal multiset must equal T (flagged before the vertex reuse).
  CHECK(verify_cover(d, spec, {{{0, 1, 3}, {0, 2, 4, 3}}}).reason ==
        RejectReason::BadEndpoint);
  // Interior reuse of a non-source vertex.
  CoverSpec spec3{CoverKind::OneToMany, 2, {0}, {2, 4}};
  CHECK(verify_cover(d, spec3, {{{0, 1, 2}, {0, 1, 4}}}).reason ==
        RejectReason::Overlap);
}

TEST_CASE("one-to-one shares both endpoints, duplicate arcs rejected") {
  Digraph d = k5();
  CoverSpec spec{CoverKind::OneToOne, 2, {0}, {4}};
  CHECK(verify_cover(d, spec, {{{0, 1, 4}, {0, 2, 3, 4}}}).accepted);
  CHECK(verify_cover(d, spec, {{{0, 1, 2, 3, 4}, {0, 4}}}).accepted);
  // Two copies of the direct arc are the same path.
  CHECK(verify_cover(Digraph(2, {{0, 1}}),
                     {CoverKind::OneToOne, 2, {0}, {1}}, {{{0, 1}, {0, 1}}})
            .reason == RejectReason::Overlap);
  // k = 3 on K5: spans all of V.
  CoverSpec spec3{CoverKind::OneToOne, 3, {0}, {4}};
  CHECK(verify_cover(d, spec3, {{{0, 1, 4}, {0, 2, 4}, {0, 3, 4}}}).accepted);
  CHECK(verify_cover(d, spec3, {{{0, 1, 4}, {0, 2, 4}, {0, 4}}}).reason ==
        RejectReason::Uncovered);
}

TEST_CASE("hamiltonian path as one-to-one with k = 1") {
  Digraph p(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  CHECK(verify_cover(p, {CoverKind::OneToOne, 1, {0}, {3}}, {{{0, 1, 2, 3}}})
            .accepted);
  // Shortcut 1->3 skips vertex 2.
  CHECK(verify_cover(p, {CoverKind::OneToOne, 1, {0}, {3}}, {{{0, 1, 3}}})
            .reason == RejectReason::Uncovered);
  CHECK(verify_cover(p, {CoverKind::OneToOne, 1, {0}, {3}}, {{{0, 1, 2}}})
            .reason == RejectReason::BadEndpoint);
}

TEST_CASE("mutation property: any single-vertex edit breaks a valid cover") {
  // Flip each vertex of a valid cover to every other value; the verifier
  // must reject each mutant (the original is the only accept in this orbit).
  Digraph d = k5();
  CoverSpec spec{CoverKind::PairedMTM, 2, {0, 1}, {2, 3}};
  PathCover good{{{0, 4, 2}, {1, 3}}};
  REQUIRE(verify_cover(d, spec, good).accepted);
  for (std::size_t p = 0; p < good.paths.size(); ++p)
    for (std::size_t i = 0; i < good.paths[p].size(); ++i)
      for (Vertex v = 0; v < d.order(); ++v) {
        if (v == good.paths[p][i]) continue;
        PathCover mutant = good;
        mutant.paths[p][i] = v;
        CHECK(!verify_cover(d, spec, mutant).accepted);
      }
}
