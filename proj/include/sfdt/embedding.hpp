#pragma once

#include <vector>

#include "sfdt/graph.hpp"

namespace sfdt {

// 2-cell embedding given by a rotation system. Faces are traced with the
// next-edge rule: after arriving at v along (u,v), leave along (v,w) where w
// follows u in the cyclic order at v. Every directed edge lies on exactly
// one face walk; bridges contribute both directions to the same face.
struct EmbeddedGraph {
  Graph g;
  std::vector<std::vector<int>> rotation;
  std::vector<std::vector<int>> faces;  // walk [v0..v_{d-1}]: edges (vi, vi+1), wrapping

  int face_degree(int fi) const { return static_cast<int>(faces[fi].size()); }
};

// Validates each rotation as a permutation of the vertex's neighbors, then
// traces faces. pre: g connected.
EmbeddedGraph make_embedded(const Graph& g, const std::vector<std::vector<int>>& rotation);

int euler_characteristic(const EmbeddedGraph& e);  // V - E + F

// Face walk visits no vertex twice (every face a simple cycle).
bool faces_all_simple(const EmbeddedGraph& e);

}  // namespace sfdt
