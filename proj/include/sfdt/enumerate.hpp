#pragma once

#include <vector>

#include "sfdt/graph.hpp"

namespace sfdt {

// All graphs on n labeled-then-canonicalized vertices, one representative
// per isomorphism class, ordered by canonical code. n is capped at 7 to keep
// exhaustive sweeps tractable (1044 graphs, 853 connected).
std::vector<Graph> enumerate_graphs_upto_iso(int n, bool connected_only);

}  // namespace sfdt
