#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "sfdt/constructible.hpp"
#include "sfdt/cover.hpp"
#include "sfdt/enumerate.hpp"
#include "sfdt/solver.hpp"
#include "sfdt/verify.hpp"

using namespace sfdt;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return build_graph(n, e);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return build_graph(n, e);
}

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
    e.push_back({i, 5 + i});
  }
  return build_graph(10, e);
}

// C4 cover with kappa 2, f = 1 on both slots, identity matchings everywhere
// (no twist): the kernel is two disjoint 4-cycles, which is not one of the
// closed shapes, so a transversal must exist.
Cover untwisted_c4() {
  Cover c = make_cover(cycle(4), 2);
  for (auto [u, v] : c.host.edges())
    for (int q = 0; q < 2; ++q) set_match(c, u, q, v, q);
  for (int v = 0; v < 4; ++v) c.f[v] = {1, 1};
  return c;
}

}  // namespace

TEST_CASE("landmark covers with no transversal") {
  CHECK(!find_sfdt(make_ladder_cover(4, "mobius")).has_value());
  CHECK(!find_sfdt(make_ladder_cover(5, "circular")).has_value());
  CHECK(!find_sfdt(make_monoblock(complete(4), 2)).has_value());
  CHECK(!find_sfdt(make_monoblock(petersen(), 2)).has_value());
  CHECK(!find_sfdt(make_monoblock(build_graph(1, {}), 1)).has_value());
  CHECK(!find_sfdt(make_tilde_complete(4, 2, {1, 2})).has_value());
  CHECK(!brute_force_sfdt(make_ladder_cover(4, "mobius")).has_value());
}

TEST_CASE("landmark covers with a transversal") {
  auto r = find_sfdt(untwisted_c4());
  REQUIRE(r.has_value());
  CHECK(is_strictly_f_degenerate(untwisted_c4(), *r));
  // Even cycle with the odd-cycle matching layout: the twist is missing, so
  // the kernel splits and a transversal exists.
  Cover c6 = make_cover(cycle(6), 2);
  for (auto [u, v] : c6.host.edges())
    for (int q = 0; q < 2; ++q) set_match(c6, u, q, v, q);
  for (int v = 0; v < 6; ++v) c6.f[v] = {1, 1};
  CHECK(find_sfdt(c6).has_value());
}

TEST_CASE("reduction handles slack vertices") {
  // fsum > deg at every vertex: always solvable, whatever the matchings.
  SplitMix rng{5};
  CoverSampleSpec spec;
  spec.kappa = 2;
  spec.fsum_extra_max = 2;
  for (const Graph& g : enumerate_graphs_upto_iso(5, true)) {
    Cover c = sample_cover(g, spec, rng);
    bool slack_everywhere = true;
    for (int v = 0; v < g.n; ++v)
      if (c.fsum(v) <= g.degree(v)) slack_everywhere = false;
    if (!slack_everywhere) continue;
    auto r = find_sfdt(c);
    REQUIRE(r.has_value());
    CHECK(is_strictly_f_degenerate(c, *r));
  }
}

TEST_CASE("solver agrees with brute force on sampled covers") {
  SplitMix rng{20240817};
  for (const Graph& g : enumerate_graphs_upto_iso(4, false)) {
    for (int kappa = 1; kappa <= 3; ++kappa) {
      for (int rep = 0; rep < 6; ++rep) {
        CoverSampleSpec spec;
        spec.kappa = kappa;
        spec.fsum_extra_max = rep % 2;
        spec.full_match_prob = rep % 3 == 0 ? 1.0 : 0.5;
        Cover c = sample_cover(g, spec, rng);
        auto fast = find_sfdt(c);
        auto slow = brute_force_sfdt(c);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) CHECK(is_strictly_f_degenerate(c, *fast));
        if (slow) CHECK(is_strictly_f_degenerate(c, *slow));
      }
    }
  }
}

TEST_CASE("brute force returns the lexicographically first transversal") {
  Cover c = untwisted_c4();
  auto r = brute_force_sfdt(c);
  REQUIRE(r.has_value());
  std::vector<int> first;
  for (int code = 0; code < 16 && first.empty(); ++code) {
    std::vector<int> t(4);
    for (int v = 0; v < 4; ++v) t[v] = (code >> (3 - v)) & 1;  // lex order
    if (is_strictly_f_degenerate(c, t)) first = t;
  }
  CHECK(*r == first);
}

TEST_CASE("raising capacities never destroys solvability") {
  SplitMix rng{99991};
  for (const Graph& g : enumerate_graphs_upto_iso(4, true)) {
    CoverSampleSpec spec;
    spec.kappa = 2;
    spec.full_match_prob = 0.6;
    Cover c = sample_cover(g, spec, rng);
    if (!find_sfdt(c).has_value()) continue;
    Cover bumped = c;
    bumped.f[rng.below(g.n)][rng.below(2)] += 1;
    CHECK(find_sfdt(bumped).has_value());
  }
}

TEST_CASE("budget guard") {
  Cover c = make_cover(build_graph(20, {}), 2);  // all f = 0: nothing works
  CHECK_THROWS_AS(brute_force_sfdt(c, 4096), BudgetExceeded);
  CHECK(!brute_force_sfdt(c).has_value());  // default budget covers 2^20
}

TEST_CASE("minimal non-SFD recognition") {
  CHECK(is_minimal_non_sfd(make_ladder_cover(4, "mobius")));
  CHECK(is_minimal_non_sfd(make_ladder_cover(5, "circular")));
  CHECK(is_minimal_non_sfd(make_monoblock(complete(4), 2)));
  CHECK(!is_minimal_non_sfd(untwisted_c4()));  // solvable
  // Gluing two blocked cycles stays minimal: any deletion leaves slack
  // capacity (fsum > degree) next to the cut, which unblocks the rest.
  Cover a = make_ladder_cover(4, "mobius");
  Cover glued = glue_at(a, 0, a, 0);
  CHECK(!find_sfdt(glued).has_value());
  CHECK(is_minimal_non_sfd(glued));
  // Starved capacities are blocked but not minimal: every vertex-deleted
  // remnant is still all-zero and still stuck.
  Cover zero = make_cover(complete(3), 1);
  for (auto [u, v] : zero.host.edges()) set_match(zero, u, 0, v, 0);
  CHECK(!find_sfdt(zero).has_value());
  CHECK(!is_minimal_non_sfd(zero));
}

TEST_CASE("structure report for minimal pairs") {
  Cover mob = make_ladder_cover(4, "mobius");
  auto rep = check_theorem_L(mob, {0, 1, 2, 3});
  CHECK(rep.pre_ok);
  CHECK(rep.i_holds);
  CHECK(rep.ii_holds);

  auto repk = check_theorem_L(make_monoblock(complete(4), 3), {0, 1, 2, 3});
  CHECK(repk.pre_ok);
  CHECK(repk.i_holds);
  CHECK(repk.ii_holds);
}

TEST_CASE("structure report rejects bad inputs") {
  auto bad1 = check_theorem_L(untwisted_c4(), {0, 1, 2, 3});
  CHECK(!bad1.pre_ok);  // solvable, so not a minimal pair
  CHECK(!bad1.pre_message.empty());
  Cover mob = make_ladder_cover(4, "mobius");
  CHECK(!check_theorem_L(mob, {0, 1}).pre_ok);      // K2 is not 2-connected here
  CHECK(!check_theorem_L(mob, {0, 1, 9}).pre_ok);   // out of range
  CHECK(!check_theorem_L(mob, {0, 1, 3}).pre_ok);   // induced P3 has a cut vertex
}

TEST_CASE("solver is deterministic") {
  SplitMix rng{4242};
  CoverSampleSpec spec;
  spec.kappa = 3;
  spec.fsum_extra_max = 1;
  spec.full_match_prob = 0.5;
  for (const Graph& g : enumerate_graphs_upto_iso(4, true)) {
    Cover c = sample_cover(g, spec, rng);
    CHECK(find_sfdt(c) == find_sfdt(c));
  }
}
