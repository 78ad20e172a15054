#include "sfdt/embedding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sfdt {

EmbeddedGraph make_embedded(const Graph& g, const std::vector<std::vector<int>>& rotation) {
  if (!is_connected(g)) throw std::invalid_argument("embedding: graph must be connected");
  if (static_cast<int>(rotation.size()) != g.n)
    throw std::invalid_argument("embedding: one rotation per vertex required");
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.adj[v])
      throw std::invalid_argument("embedding: rotation at vertex " + std::to_string(v) +
                                  " is not a permutation of its neighbors");
  }
  EmbeddedGraph e;
  e.g = g;
  e.rotation = rotation;

  // position of u within rotation[v]
  std::vector<std::map<int, int>> pos(g.n);
  for (int v = 0; v < g.n; ++v)
    for (size_t i = 0; i < rotation[v].size(); ++i) pos[v][rotation[v][i]] = static_cast<int>(i);

  std::map<std::pair<int, int>, char> used;
  for (int v = 0; v < g.n; ++v)
    for (int w : g.adj[v]) used[{v, w}] = 0;

  for (int v = 0; v < g.n; ++v)
    for (int w0 : rotation[v]) {
      if (used[{v, w0}]) continue;
      std::vector<int> walk;
      int a = v, b = w0;
      do {
        used[{a, b}] = 1;
        walk.push_back(a);
        int i = pos[b][a];
        int nxt = e.rotation[b][(i + 1) % e.rotation[b].size()];
        a = b;
        b = nxt;
      } while (!(a == v && b == w0));
      e.faces.push_back(std::move(walk));
    }
  return e;
}

int euler_characteristic(const EmbeddedGraph& e) {
  return e.g.n - e.g.m() + static_cast<int>(e.faces.size());
}

bool faces_all_simple(const EmbeddedGraph& e) {
  for (const auto& walk : e.faces) {
    std::vector<int> s = walk;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  }
  return true;
}

}  // namespace sfdt
