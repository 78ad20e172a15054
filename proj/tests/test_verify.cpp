#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "sfdt/cover.hpp"
#include "sfdt/enumerate.hpp"
#include "sfdt/graph.hpp"
#include "sfdt/io.hpp"
#include "sfdt/verify.hpp"

using namespace sfdt;

TEST_CASE("splitmix64 matches the reference stream") {
  SplitMix rng{0};
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);  // published first output for seed 0
  SplitMix a{12345}, b{12345};
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  SplitMix c{12345};
  for (int i = 0; i < 200; ++i) {
    int x = c.below(7);
    CHECK(x >= 0);
    CHECK(x < 7);
    double u = c.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("item seeds are stable and collision-free on a work grid") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t a = 0; a < 32; ++a)
    for (std::uint64_t b = 0; b < 32; ++b) seen.insert(item_seed(99, a, b));
  CHECK(seen.size() == 32 * 32);
  CHECK(item_seed(99, 3, 4) == item_seed(99, 3, 4));
  CHECK(item_seed(99, 3, 4) != item_seed(100, 3, 4));
  CHECK(item_seed(99, 3, 4) != item_seed(99, 4, 3));
}

TEST_CASE("isomorphism-free enumeration hits the known counts") {
  const std::vector<long long> connected{1, 1, 2, 6, 21, 112, 853};
  const std::vector<long long> all{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    auto conn = enumerate_graphs_upto_iso(n, true);
    auto everything = enumerate_graphs_upto_iso(n, false);
    CHECK(static_cast<long long>(conn.size()) == connected[n - 1]);
    CHECK(static_cast<long long>(everything.size()) == all[n - 1]);
    for (const Graph& g : conn) {
      CHECK(g.n == n);
      CHECK(is_connected(g));
    }
    if (n <= 5) {  // representatives are distinct and sorted by code
      std::vector<std::uint64_t> codes;
      for (const Graph& g : everything) codes.push_back(canonical_code(g));
      for (std::size_t i = 1; i < codes.size(); ++i) CHECK(codes[i - 1] < codes[i]);
    }
  }
}

TEST_CASE("cover sampling is deterministic in the seed") {
  Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
  CoverSampleSpec spec;
  spec.kappa = 3;
  spec.fsum_extra_max = 2;
  spec.full_match_prob = 0.5;
  SplitMix r1{4242}, r2{4242};
  Cover a = sample_cover(g, spec, r1);
  Cover b = sample_cover(g, spec, r2);
  CHECK(a == b);
  CHECK(write_cover(a) == write_cover(b));
  SplitMix r3{4243};
  Cover c = sample_cover(g, spec, r3);
  CHECK(write_cover(a) != write_cover(c));  // neighboring seed, different draw
}

TEST_CASE("cover sampling honours the capacity knobs") {
  Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  SplitMix rng{7};
  CoverSampleSpec exact;  // defaults: fsum = deg exactly
  exact.kappa = 2;
  for (int rep = 0; rep < 10; ++rep) {
    Cover c = sample_cover(g, exact, rng);
    for (int v = 0; v < g.n; ++v) CHECK(c.fsum(v) == g.degree(v));
    for (auto [u, v] : g.edges())
      for (int q = 0; q < c.kappa; ++q) CHECK(c.matched(u, q, v) != -1);
  }
  CoverSampleSpec padded;
  padded.kappa = 2;
  padded.fsum_extra_max = 2;
  for (int rep = 0; rep < 10; ++rep) {
    Cover c = sample_cover(g, padded, rng);
    for (int v = 0; v < g.n; ++v) {
      CHECK(c.fsum(v) >= g.degree(v));
      CHECK(c.fsum(v) <= g.degree(v) + 2);
    }
  }
  CoverSampleSpec capped;
  capped.kappa = 4;
  capped.fixed_fsum = 4;
  capped.f_cap = 1;
  Cover c = sample_cover(g, capped, rng);
  for (int v = 0; v < g.n; ++v)
    for (int q = 0; q < 4; ++q) CHECK(c.f[v][q] == 1);  // the only split under the cap
  CoverSampleSpec partial;
  partial.kappa = 3;
  partial.full_match_prob = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    Cover c2 = sample_cover(g, partial, rng);
    for (auto [u, v] : g.edges()) {
      int matched_count = 0;
      for (int q = 0; q < 3; ++q)
        if (c2.matched(u, q, v) != -1) ++matched_count;
      CHECK(matched_count <= 3);
    }
  }
}

TEST_CASE("cover sampling rejects impossible requests") {
  Graph g = build_graph(2, {{0, 1}});
  SplitMix rng{1};
  CoverSampleSpec bad_kappa;
  bad_kappa.kappa = 0;
  CHECK_THROWS_AS(sample_cover(g, bad_kappa, rng), std::invalid_argument);
  CoverSampleSpec tight;  // 5 cannot split into two parts of at most 2
  tight.kappa = 2;
  tight.fixed_fsum = 5;
  tight.f_cap = 2;
  CHECK_THROWS_AS(sample_cover(g, tight, rng), std::invalid_argument);
}

TEST_CASE("report text follows the fixed line layout") {
  VerifyReport rep;
  rep.suite = "demo";
  rep.params = {{"k", "1"}};
  rep.graphs_checked = 2;
  rep.covers_checked = 5;
  rep.violations = {"x bad"};
  CHECK(rep.to_text() ==
        "SUITE demo\nPARAM k 1\nGRAPHS 2\nCOVERS 5\nVIOLATION x bad\n"
        "VIOLATIONS 1\nRESULT FAIL\n");
  CHECK(!rep.ok());
  rep.violations.clear();
  CHECK(rep.ok());
  CHECK(rep.to_text().find("RESULT PASS") != std::string::npos);
}

TEST_CASE("degeneracy sweep passes and counts its corpus") {
  VerifyReport rep = verify_corollary_3degenerate(6);
  CHECK(rep.ok());
  CHECK(rep.graphs_checked > 0);
  CHECK(rep.graphs_checked < 143);  // a proper subset of all connected graphs
  CHECK(rep.covers_checked == 0);
  std::string text = rep.to_text();
  CHECK(text.find("SUITE 3degenerate") == 0);
  CHECK(text.find("PARAM nmax 6") != std::string::npos);
  CHECK(text.find("RESULT PASS") != std::string::npos);
}

TEST_CASE("solvability dichotomy holds on sampled covers") {
  VerifyReport rep = verify_theorem_mr(4, 2, 3, 2026);
  CHECK(rep.ok());
  CHECK(rep.graphs_checked == 10);  // connected graphs up to 4 vertices
  CHECK(rep.covers_checked == 30);
  std::string text = rep.to_text();
  CHECK(text.find("SUITE mr") == 0);
  CHECK(text.find("PARAM mode sampled") != std::string::npos);
}

TEST_CASE("solvability dichotomy holds on the exhaustive sweep") {
  VerifyReport rep = verify_theorem_mr(3, 2, 0, 0, 1, true);
  CHECK(rep.ok());
  CHECK(rep.graphs_checked == 4);
  // Single vertex: 1. Edge: 2 masks x 2 splits each side = 8. Path: 4 masks x
  // (2*3*2) = 48. Triangle: 8 masks x 27 = 216.
  CHECK(rep.covers_checked == 1 + 8 + 48 + 216);
  CHECK(rep.to_text().find("PARAM mode exhaustive") != std::string::npos);
}

TEST_CASE("exhaustive mode rejects oversized requests") {
  CHECK_THROWS_AS(verify_theorem_mr(6, 2, 0, 0, 1, true), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem_mr(4, 3, 0, 0, 1, true), std::invalid_argument);
}

TEST_CASE("campaigns are reproducible and scheduling-independent") {
  VerifyReport serial = verify_theorem_mr(4, 2, 2, 77, 1);
  VerifyReport again = verify_theorem_mr(4, 2, 2, 77, 1);
  VerifyReport wide = verify_theorem_mr(4, 2, 2, 77, 4);
  CHECK(serial.to_text() == again.to_text());
  CHECK(serial.to_text() == wide.to_text());
  VerifyReport d1 = verify_dp4("fig2-free-planar", 4, 2, 5, 4, 1);
  VerifyReport d3 = verify_dp4("fig2-free-planar", 4, 2, 5, 4, 3);
  CHECK(d1.to_text() == d3.to_text());
}

TEST_CASE("four-capacity covers on the safe families always solve") {
  VerifyReport fig2 = verify_dp4("fig2-free-planar", 5, 2, 11, 4);
  CHECK(fig2.ok());
  CHECK(fig2.graphs_checked > 0);
  CHECK(fig2.covers_checked == 2 * fig2.graphs_checked);
  CHECK(fig2.to_text().find("SUITE dp4") == 0);
  VerifyReport quad = verify_dp4("no4cycles-planar", 5, 2, 12, 4, 1, 0.6);
  CHECK(quad.ok());
  VerifyReport fig3 = verify_dp4("fig3-free-planar", 5, 1, 13, 4);
  CHECK(fig3.ok());
  CHECK_THROWS_AS(verify_dp4("mystery-family", 4, 1, 0, 4), std::invalid_argument);
}

TEST_CASE("structure dichotomy: low degree or a guaranteed cap") {
  for (const char* family : {"fig2-free-planar", "fig3-free-planar", "no4cycles-planar"}) {
    VerifyReport rep = verify_structure(family, 6);
    CHECK(rep.ok());
    CHECK(rep.graphs_checked > 0);
    CHECK(rep.to_text().find("SUITE structure") == 0);
  }
  // The same family filter feeds both suites, so the corpora agree.
  CHECK(verify_structure("fig2-free-planar", 6).graphs_checked ==
        verify_corollary_3degenerate(6).graphs_checked);
  CHECK_THROWS_AS(verify_structure("bogus", 4), std::invalid_argument);
}
