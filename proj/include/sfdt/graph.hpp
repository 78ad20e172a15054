#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sfdt {

// Simple undirected graph, vertices 0..n-1, adjacency lists kept sorted.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int m() const;
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // each as (u,v) with u<v, sorted
};

// Validates: vertex ids in range, no self-loops, no duplicate edges.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

int min_degree(const Graph& g);
int max_degree(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);  // sorted vertex lists

bool is_regular(const Graph& g, int d);
bool is_cycle(const Graph& g);     // connected, 2-regular, n >= 3
bool is_complete(const Graph& g);
bool is_2connected(const Graph& g);  // n >= 3, connected, no cut vertex

// Every nonempty subgraph has a vertex of degree <= k (checked by peeling).
bool is_k_degenerate(const Graph& g, int k);

// Face-insertion planarity test, run per biconnected block.
bool is_planar(const Graph& g);

struct Blocks {
  std::vector<std::vector<int>> block_vertices;                 // sorted per block
  std::vector<std::vector<std::pair<int, int>>> block_edges;    // (u,v) u<v, sorted
  std::vector<int> cut_vertices;                                // sorted
};
// pre: g connected, n >= 1. Blocks partition the edge set.
Blocks blocks_and_cut_vertices(const Graph& g);

// Vertex (i,j) of a x b gets id i*b.n + j.
Graph cartesian_product(const Graph& a, const Graph& b);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // new id -> old id
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& verts);

// Backtracking isomorphism search; returns mapping a-vertex -> b-vertex.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
bool is_isomorphic(const Graph& a, const Graph& b);

// Lexicographically least upper-triangle adjacency bits over all labelings,
// packed into a uint64 (column-major: bit (i,j), i<j, columns ascending).
// Requires n <= 11 so the code fits in 55 bits.
std::uint64_t canonical_code(const Graph& g);

}  // namespace sfdt
