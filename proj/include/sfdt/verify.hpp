#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sfdt/cover.hpp"
#include "sfdt/graph.hpp"

namespace sfdt {

// Deterministic, platform-independent RNG (splitmix64). Sampling uses plain
// modulo reduction so identical seeds give identical draws everywhere.
struct SplitMix {
  std::uint64_t s = 0;
  std::uint64_t next();
  int below(int n);    // uniform in [0, n), n > 0
  double unit();       // uniform in [0, 1)
};

// Independent stream for work item (a, b) of a campaign keyed by `master`.
std::uint64_t item_seed(std::uint64_t master, std::uint64_t a,
                        std::uint64_t b);

struct CoverSampleSpec {
  int kappa = 2;
  int fsum_extra_max = 0;   // per-vertex fsum = deg(v) + uniform[0..max]
  int fixed_fsum = -1;      // when >= 0, overrides: fsum = this for every v
  int f_cap = -1;           // per-slot upper bound on f (-1 = none)
  double full_match_prob = 1.0;  // else a uniform partial matching
};
Cover sample_cover(const Graph& g, const CoverSampleSpec& spec,
                   SplitMix& rng);

struct VerifyReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  long long graphs_checked = 0;
  long long covers_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_text() const;
};

// Every connected planar graph up to nmax vertices avoiding the two
// triangle-beside-quadrilateral patterns is 3-degenerate.
VerifyReport verify_corollary_3degenerate(int nmax, int jobs = 1);

// Solvability matches non-constructibility on every cover with
// fsum(v) >= deg(v). Exhaustive mode (kappa <= 2, nmax <= 5) enumerates all
// full matchings and all degree-exact capacity splits; otherwise
// covers_per_graph seeded samples per graph.
VerifyReport verify_theorem_mr(int nmax, int kappa, int covers_per_graph,
                               std::uint64_t seed, int jobs = 1,
                               bool exhaustive = false);

// family: fig2-free-planar | fig3-free-planar | no4cycles-planar.
// Every family graph is DP-4-colorable in the strong sense: any cover with
// the family's per-slot cap and fsum = 4 everywhere admits a transversal.
VerifyReport verify_dp4(const std::string& family, int nmax,
                        int covers_per_graph, std::uint64_t seed,
                        int kappa = 4, int jobs = 1,
                        double full_match_prob = 1.0);

// Structural dichotomies: every connected planar family graph has minimum
// degree <= 3 or contains the family's guaranteed cap subgraph.
VerifyReport verify_structure(const std::string& family, int nmax,
                              int jobs = 1);

}  // namespace sfdt
