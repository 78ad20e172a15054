#include "sfdt/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sfdt {

namespace {

// Levelwise extension: every graph on k vertices is a graph on k-1 vertices
// plus one vertex joined to some subset of them; every connected graph on k
// vertices is a connected graph on k-1 vertices (delete a non-cut vertex)
// plus one vertex joined to a nonempty subset. Deduplicate by canonical code
// at each level.
std::vector<Graph> extend_all(const std::vector<Graph>& prev, int k,
                              bool need_neighbor) {
  std::map<std::uint64_t, Graph> seen;
  for (const Graph& g : prev) {
    int base = g.n;
    unsigned full = 1u << base;
    for (unsigned mask = need_neighbor ? 1 : 0; mask < full; ++mask) {
      std::vector<std::pair<int, int>> edges = g.edges();
      for (int u = 0; u < base; ++u)
        if (mask & (1u << u)) edges.push_back({u, base});
      Graph h = build_graph(k, edges);
      seen.emplace(canonical_code(h), std::move(h));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [code, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs_upto_iso(int n, bool connected_only) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("enumeration supports 1 <= n <= 7");
  std::vector<Graph> level = {build_graph(1, {})};
  for (int k = 2; k <= n; ++k)
    level = extend_all(level, k, connected_only);
  if (connected_only) {
    // The nonempty-mask constraint keeps every intermediate graph connected
    // only if extensions always attach to the connected part, which they do:
    // vertices 0..k-2 are connected by induction and vertex k-1 attaches.
    for (const Graph& g : level)
      if (!is_connected(g))
        throw std::logic_error("enumeration produced a disconnected graph");
  }
  return level;
}

}  // namespace sfdt
