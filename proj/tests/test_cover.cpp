#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sfdt/constructible.hpp"
#include "sfdt/cover.hpp"
#include "sfdt/enumerate.hpp"
#include "sfdt/graph.hpp"
#include "sfdt/verify.hpp"
#include "support/oracles.hpp"

using namespace sfdt;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return build_graph(n, e);
}

// Graph the transversal r selects inside the kernel: host vertices, with uv
// kept iff the chosen slots are matched across uv.
Graph selected_graph(const Cover& c, const std::vector<int>& r) {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : c.host.edges())
    if (c.matched(u, r[u], v) == r[v]) e.push_back({u, v});
  return build_graph(c.host.n, e);
}

std::vector<int> selected_f(const Cover& c, const std::vector<int>& r) {
  std::vector<int> f(c.host.n);
  for (int v = 0; v < c.host.n; ++v) f[v] = c.f[v][r[v]];
  return f;
}

}  // namespace

TEST_CASE("make_cover and set_match validate") {
  Graph g = cycle(4);
  Cover c = make_cover(g, 2);
  CHECK(c.kappa == 2);
  CHECK(c.fsum(0) == 0);
  CHECK(c.matched(0, 0, 1) == -1);
  set_match(c, 1, 0, 0, 1);  // order of endpoints must not matter
  CHECK(c.matched(0, 1, 1) == 0);
  CHECK(c.matched(1, 0, 0) == 1);
  CHECK_THROWS_AS(set_match(c, 0, 1, 1, 1), std::invalid_argument);  // slot busy at 0
  CHECK_THROWS_AS(set_match(c, 0, 0, 1, 0), std::invalid_argument);  // slot busy at 1
  set_match(c, 0, 0, 1, 1);  // the free diagonal is fine
  CHECK_THROWS_AS(set_match(c, 0, 0, 2, 0), std::invalid_argument);  // not an edge
  CHECK_THROWS_AS(set_match(c, 0, 2, 1, 0), std::invalid_argument);  // slot out of range
  CHECK_THROWS_AS(make_cover(g, 0), std::invalid_argument);
}

TEST_CASE("cover_from_lists encodes list coloring") {
  // Triangle with lists {1,2}, {1,2}, {1,2}: kappa 2, full identity matches.
  Graph k3 = cycle(3);
  Cover c = cover_from_lists(k3, {{1, 2}, {1, 2}, {1, 2}});
  CHECK(c.kappa == 2);
  for (int v = 0; v < 3; ++v) {
    CHECK(c.f[v][0] == 1);
    CHECK(c.f[v][1] == 1);
  }
  CHECK(c.matched(0, 0, 1) == 0);
  CHECK(c.matched(0, 1, 1) == 1);
  // Ragged lists: capacity only where the color is listed.
  Cover r = cover_from_lists(k3, {{1}, {2}, {1, 3}});
  CHECK(r.kappa == 3);
  CHECK(r.f[0][0] == 1);
  CHECK(r.f[0][1] == 0);
  CHECK(r.f[2][2] == 1);
  CHECK(r.matched(0, 0, 1) == -1);  // no color shared by both lists
  CHECK(r.matched(0, 0, 2) == 0);   // color 1 shared
  CHECK(r.matched(1, 1, 2) == -1);
}

TEST_CASE("kernel keeps positive-capacity slots only") {
  Graph k2 = build_graph(2, {{0, 1}});
  Cover c = make_cover(k2, 3);
  c.f[0][0] = 1;
  c.f[0][2] = 2;
  c.f[1][1] = 1;
  set_match(c, 0, 0, 1, 1);
  set_match(c, 0, 1, 1, 0);  // dead at both ends: slot (0,1) has f 0
  Kernel k = kernel(c);
  CHECK(k.graph.n == 3);
  CHECK(k.graph.m() == 1);
  REQUIRE(k.labels.size() == 3);
  CHECK(k.labels[0] == std::pair<int, int>{0, 0});
  CHECK(k.labels[1] == std::pair<int, int>{0, 2});
  CHECK(k.labels[2] == std::pair<int, int>{1, 1});
}

TEST_CASE("ladder cover kernels have the advertised shapes") {
  Kernel mob = kernel(make_ladder_cover(4, "mobius"));
  CHECK(is_cycle(mob.graph));
  CHECK(mob.graph.n == 8);
  Kernel circ = kernel(make_ladder_cover(5, "circular"));
  auto comps = connected_components(circ.graph);
  REQUIRE(comps.size() == 2);
  for (auto& comp : comps) {
    auto sub = induced_subgraph(circ.graph, comp);
    CHECK(is_cycle(sub.graph));
    CHECK(sub.graph.n == 5);
  }
}

TEST_CASE("fsum_profile") {
  Cover c = make_ladder_cover(5, "circular");
  CHECK(fsum_profile(c) == std::vector<int>(5, 2));
}

TEST_CASE("restrict_cover commutes with kernel") {
  SplitMix rng{421};
  CoverSampleSpec spec;
  spec.kappa = 3;
  spec.fsum_extra_max = 2;
  spec.full_match_prob = 0.4;
  for (const Graph& g : enumerate_graphs_upto_iso(4, true)) {
    Cover c = sample_cover(g, spec, rng);
    std::vector<int> S;
    for (int v = 0; v < g.n; v += 2) S.push_back(v);
    if (S.empty()) continue;
    Cover rc = restrict_cover(c, S);
    CHECK(rc.host.n == static_cast<int>(S.size()));
    // Restricted f agrees slot-wise.
    for (std::size_t i = 0; i < S.size(); ++i) CHECK(rc.f[i] == c.f[S[i]]);
    // Kernel of the restriction = induced kernel on fans over S.
    Kernel big = kernel(c);
    std::vector<int> keep;
    for (int k = 0; k < big.graph.n; ++k)
      for (std::size_t i = 0; i < S.size(); ++i)
        if (big.labels[k].first == S[i]) keep.push_back(k);
    auto induced = induced_subgraph(big.graph, keep);
    CHECK(is_isomorphic(kernel(rc).graph, induced.graph));
  }
}

TEST_CASE("degree-exact capacities on a cycle are stuck until one is raised") {
  Cover c = make_cover(cycle(4), 1);
  for (auto [u, v] : c.host.edges()) set_match(c, u, 0, v, 0);
  c.f = {{2}, {2}, {2}, {2}};  // f = degree everywhere: nothing has deg < f
  CHECK(!is_strictly_f_degenerate(c, {0, 0, 0, 0}));
  // One extra unit starts the cascade: peel it, then the path unravels.
  c.f[1][0] = 3;
  CHECK(is_strictly_f_degenerate(c, {0, 0, 0, 0}));
}

TEST_CASE("degeneracy check validates the transversal argument") {
  Cover c = make_cover(cycle(3), 2);
  CHECK_THROWS_AS(is_strictly_f_degenerate(c, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(is_strictly_f_degenerate(c, {0, 0, 2}), std::invalid_argument);
  // All capacities are still 0, so no chosen slot can ever peel.
  CHECK(!is_strictly_f_degenerate(c, {0, 0, 0}));
}

TEST_CASE("zero capacity on a chosen slot forces failure") {
  // f(v, r(v)) = 0 means v can never peel, even isolated.
  Cover c = make_cover(build_graph(1, {}), 1);
  CHECK(!is_strictly_f_degenerate(c, {0}));
  c.f[0][0] = 1;
  CHECK(is_strictly_f_degenerate(c, {0}));
}

TEST_CASE("agrees with the subset oracle on sampled covers") {
  SplitMix rng{777};
  for (const Graph& g : enumerate_graphs_upto_iso(4, false)) {
    for (int kappa = 1; kappa <= 3; ++kappa) {
      CoverSampleSpec spec;
      spec.kappa = kappa;
      spec.fixed_fsum = 2;
      spec.full_match_prob = 0.5;
      Cover c = sample_cover(g, spec, rng);
      std::vector<int> r(g.n);
      for (int v = 0; v < g.n; ++v) r[v] = rng.below(kappa);
      bool got = is_strictly_f_degenerate(c, r);
      CHECK(got == oracles::strictly_f_degenerate(selected_graph(c, r), selected_f(c, r)));
    }
  }
}

TEST_CASE("with unit capacities a transversal works iff it is independent") {
  SplitMix rng{31337};
  for (const Graph& g : enumerate_graphs_upto_iso(4, true)) {
    CoverSampleSpec spec;
    spec.kappa = 2;
    spec.fixed_fsum = 2;  // with kappa 2 and cap 1 this forces f = 1 on both slots
    spec.f_cap = 1;
    spec.full_match_prob = 0.7;
    Cover c = sample_cover(g, spec, rng);
    for (int rep = 0; rep < 8; ++rep) {
      std::vector<int> r(g.n);
      for (int v = 0; v < g.n; ++v) r[v] = rng.below(2);
      CHECK(is_strictly_f_degenerate(c, r) == (selected_graph(c, r).m() == 0));
    }
  }
}

TEST_CASE("peel_check ignores inactive vertices") {
  Graph g = cycle(4);
  Cover c = make_cover(g, 1);
  for (auto [u, v] : g.edges()) set_match(c, u, 0, v, 0);
  c.f = {{2}, {2}, {2}, {2}};
  // The full cycle is stuck, but every proper induced piece has an endpoint
  // or isolated vertex whose degree drops below its capacity.
  CHECK(!peel_check(c, {0, 0, 0, 0}, {1, 1, 1, 1}));
  CHECK(peel_check(c, {0, 0, 0, 0}, {1, 1, 1, 0}));
  CHECK(peel_check(c, {0, 0, 0, 0}, {0, 1, 0, 1}));
  CHECK(peel_check(c, {0, 0, 0, 0}, {0, 0, 0, 0}));  // vacuous
}

TEST_CASE("peel_check matches restrict_cover + full check") {
  SplitMix rng{2024};
  CoverSampleSpec spec;
  spec.kappa = 2;
  spec.fsum_extra_max = 1;
  spec.full_match_prob = 0.6;
  for (const Graph& g : enumerate_graphs_upto_iso(4, true)) {
    Cover c = sample_cover(g, spec, rng);
    for (int mask = 1; mask < (1 << g.n); ++mask) {
      std::vector<char> active(g.n, 0);
      std::vector<int> S;
      for (int v = 0; v < g.n; ++v)
        if (mask >> v & 1) {
          active[v] = 1;
          S.push_back(v);
        }
      std::vector<int> r(g.n);
      for (int v = 0; v < g.n; ++v) r[v] = rng.below(2);
      Cover rc = restrict_cover(c, S);
      std::vector<int> rsub;
      for (int v : S) rsub.push_back(r[v]);
      CHECK(peel_check(c, r, active) == is_strictly_f_degenerate(rc, rsub));
    }
  }
}
