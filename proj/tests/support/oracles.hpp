#pragma once

#include <vector>

#include "sfdt/graph.hpp"
#include "sfdt/patterns.hpp"

namespace sfdt::oracles {

// Planarity by Kuratowski's criterion: no subdivision of K5 or K3,3.
// Exponential search over branch vertices and vertex-disjoint linking paths;
// intended for n <= 8.
bool planar(const Graph& g);

// Every injective pattern embedding, in lexicographic order of the image
// vector. Brute force over all injections; intended for small inputs.
std::vector<std::vector<int>> all_pattern_matches(const Pattern& p,
                                                  const Graph& g);

// Strict f-degeneracy straight from the definition: every nonempty vertex
// subset induces a subgraph with some vertex below its capacity. n <= 20.
bool strictly_f_degenerate(const Graph& g, const std::vector<int>& f);

}  // namespace sfdt::oracles
