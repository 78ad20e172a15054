#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfdt/graph.hpp"

namespace sfdt {

// Subgraph pattern with optional exact host-degree constraints per vertex
// (-1 = unconstrained). Matching is subgraph, not induced.
struct Pattern {
  Graph graph;
  std::vector<int> host_degree;
};

// Names: fig2a fig2b fig3a fig3b fig3c fig5a fig5b (fig3a and fig5a equal
// fig2a). No degree constraints on builtins.
Pattern builtin_pattern(const std::string& name);

// Pattern file: edge-list format plus optional "deg V 4" constraint lines.
Pattern parse_pattern(const std::string& text);

// Injective map pattern-vertex -> host-vertex sending pattern edges to host
// edges, honoring degree constraints; lexicographically least, or nothing.
std::optional<std::vector<int>> find_pattern(const Pattern& p, const Graph& g);

struct Cap {
  std::vector<int> cycle;  // chordless cycle in walk order
  int apex;                // adjacent to exactly two consecutive cycle vertices
};
// First (deterministic) cap with cycle length in [kmin, kmax]; if
// require_degree4, every vertex of cycle+apex must have host degree 4.
std::optional<Cap> find_cap(const Graph& g, int kmin, int kmax, bool require_degree4);

// family: fig2-free | fig3-free | fig5-free | no-4-cycles | no-5-cycles
bool hypothesis_check(const Graph& g, const std::string& family);

}  // namespace sfdt
