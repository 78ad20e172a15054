#pragma once

#include <utility>
#include <vector>

#include "sfdt/graph.hpp"

namespace sfdt {

// Cover of a host graph: each host vertex v carries a fan of kappa slot
// vertices (v,q), q in [0,kappa); adjacent fans are joined by a partial
// injective matching per host edge; f(v,q) is a nonnegative capacity.
// Slots are 0-based internally (file formats print them 1-based).
struct Cover {
  Graph host;
  int kappa = 0;
  std::vector<std::vector<int>> f;    // f[v][q]
  std::vector<std::vector<int>> fwd;  // per edge id (u<v): fwd[e][qu] = qv or -1
  std::vector<std::vector<int>> bwd;  // inverse: bwd[e][qv] = qu or -1
  std::vector<int> eid;               // host.n * host.n lookup, -1 if no edge

  int edge_id(int u, int v) const { return eid[u * host.n + v]; }
  // Slot at v matched with (u,q) across host edge uv, or -1. pre: uv is an edge.
  int matched(int u, int q, int v) const {
    int e = edge_id(u, v);
    return u < v ? fwd[e][q] : bwd[e][q];
  }
  int fsum(int v) const {
    int s = 0;
    for (int q = 0; q < kappa; ++q) s += f[v][q];
    return s;
  }

  bool operator==(const Cover& o) const {
    return host.n == o.host.n && host.adj == o.host.adj && kappa == o.kappa && f == o.f &&
           fwd == o.fwd;
  }
};

// All capacities 0, all matchings empty.
Cover make_cover(const Graph& host, int kappa);

// Record (u,qu) ~ (v,qv). Throws if uv is not a host edge, slots are out of
// range, or either slot is already matched on this edge.
void set_match(Cover& c, int u, int qu, int v, int qv);

// List-coloring encoding: colors are 1-based; kappa = max color anywhere;
// f(v,q)=1 iff color q+1 is in lists[v]; matchings connect equal colors.
Cover cover_from_lists(const Graph& g, const std::vector<std::vector<int>>& lists);

// Fan vertices with positive capacity and the matching edges among them.
struct Kernel {
  Graph graph;
  std::vector<std::pair<int, int>> labels;  // kernel vertex -> (host v, slot q)
};
Kernel kernel(const Cover& c);

// Cover of the induced host subgraph on S (host reindexed, ids sorted).
Cover restrict_cover(const Cover& c, const std::vector<int>& S);

std::vector<int> fsum_profile(const Cover& c);

// Peel H[R]: repeatedly delete a chosen (v,r(v)) whose current degree among
// chosen-and-matched neighbors is < f(v,r(v)); true iff everything peels.
// Throws if r is not a transversal.
bool is_strictly_f_degenerate(const Cover& c, const std::vector<int>& r);

// Same peel restricted to the host vertices with active[v] != 0; choice is
// only read at active vertices.
bool peel_check(const Cover& c, const std::vector<int>& choice, const std::vector<char>& active);

}  // namespace sfdt
