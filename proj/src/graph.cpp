#include "sfdt/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sfdt {

int Graph::m() const {
  int s = 0;
  for (const auto& a : adj) s += static_cast<int>(a.size());
  return s / 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) e.emplace_back(u, v);
  return e;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = g.adj[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw std::invalid_argument("graph: duplicate edge");
  }
  return g;
}

int min_degree(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("min_degree: empty graph");
  int d = g.degree(0);
  for (int v = 1; v < g.n; ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("max_degree: empty graph");
  int d = g.degree(0);
  for (int v = 1; v < g.n; ++v) d = std::max(d, g.degree(v));
  return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.n, -1);
  int nc = 0;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj[u])
        if (comp[w] == -1) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int v = 0; v < g.n; ++v) out[comp[v]].push_back(v);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  return connected_components(g).size() == 1;
}

bool is_regular(const Graph& g, int d) {
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != d) return false;
  return true;
}

bool is_cycle(const Graph& g) {
  return g.n >= 3 && is_regular(g, 2) && is_connected(g);
}

bool is_complete(const Graph& g) {
  return is_regular(g, g.n - 1);
}

bool is_k_degenerate(const Graph& g, int k) {
  std::vector<int> deg(g.n);
  std::vector<char> removed(g.n, 0);
  std::vector<int> queue;
  for (int v = 0; v < g.n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= k) queue.push_back(v);
  }
  int removed_count = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    ++removed_count;
    for (int w : g.adj[v])
      if (!removed[w] && --deg[w] == k) queue.push_back(w);
  }
  return removed_count == g.n;
}

Blocks blocks_and_cut_vertices(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("blocks: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("blocks: graph not connected");
  Blocks out;
  if (g.n == 1) {
    out.block_vertices.push_back({0});
    out.block_edges.push_back({});
    return out;
  }
  std::vector<int> num(g.n, -1), low(g.n, 0);
  std::vector<char> is_cut(g.n, 0);
  std::vector<std::pair<int, int>> estack;
  int timer = 0;

  auto emit_block = [&](std::pair<int, int> top_edge) {
    std::vector<std::pair<int, int>> be;
    while (true) {
      auto e = estack.back();
      estack.pop_back();
      be.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
      if (e == top_edge) break;
    }
    std::sort(be.begin(), be.end());
    std::vector<int> bv;
    for (auto [a, b] : be) {
      bv.push_back(a);
      bv.push_back(b);
    }
    std::sort(bv.begin(), bv.end());
    bv.erase(std::unique(bv.begin(), bv.end()), bv.end());
    out.block_vertices.push_back(std::move(bv));
    out.block_edges.push_back(std::move(be));
  };

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    num[u] = low[u] = timer++;
    int child_count = 0;
    for (int w : g.adj[u]) {
      if (w == parent) {
        parent = -2;  // skip the tree edge to the parent exactly once (parallel-free graphs)
        continue;
      }
      if (num[w] == -1) {
        ++child_count;
        estack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= num[u]) {
          if (num[u] > 0) is_cut[u] = 1;
          emit_block({u, w});
        }
      } else if (num[w] < num[u]) {
        estack.emplace_back(u, w);
        low[u] = std::min(low[u], num[w]);
      }
    }
    if (num[u] == 0 && child_count >= 2) is_cut[u] = 1;
  };
  dfs(0, -1);

  for (int v = 0; v < g.n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

bool is_2connected(const Graph& g) {
  if (g.n < 3 || !is_connected(g)) return false;
  return blocks_and_cut_vertices(g).cut_vertices.empty();
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges;
  auto id = [&](int i, int j) { return i * b.n + j; };
  for (int i = 0; i < a.n; ++i)
    for (auto [j1, j2] : b.edges()) edges.emplace_back(id(i, j1), id(i, j2));
  for (int j = 0; j < b.n; ++j)
    for (auto [i1, i2] : a.edges()) edges.emplace_back(id(i1, j), id(i2, j));
  return build_graph(a.n * b.n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  InducedSubgraph out;
  out.to_parent = verts;
  std::sort(out.to_parent.begin(), out.to_parent.end());
  if (std::adjacent_find(out.to_parent.begin(), out.to_parent.end()) != out.to_parent.end())
    throw std::invalid_argument("induced_subgraph: duplicate vertex");
  std::vector<int> to_new(g.n, -1);
  for (int i = 0; i < static_cast<int>(out.to_parent.size()); ++i) {
    int v = out.to_parent[i];
    if (v < 0 || v >= g.n) throw std::invalid_argument("induced_subgraph: vertex out of range");
    to_new[v] = i;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (to_new[u] != -1 && to_new[v] != -1) edges.emplace_back(to_new[u], to_new[v]);
  out.graph = build_graph(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

namespace {

bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<char>& used, int k) {
  if (k == a.n) return true;
  for (int w = 0; w < b.n; ++w) {
    if (used[w] || b.degree(w) != a.degree(k)) continue;
    bool ok = true;
    for (int u : a.adj[k]) {
      if (u < k && !b.has_edge(map[u], w)) { ok = false; break; }
    }
    if (ok) {
      // also require non-adjacency to be preserved among mapped vertices
      for (int u = 0; u < k && ok; ++u)
        if (!a.has_edge(u, k) && b.has_edge(map[u], w)) ok = false;
    }
    if (!ok) continue;
    map[k] = w;
    used[w] = 1;
    if (iso_extend(a, b, map, used, k + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.m() != b.m()) return std::nullopt;
  std::vector<int> da, db;
  for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  std::vector<int> map(a.n, -1);
  std::vector<char> used(b.n, 0);
  if (iso_extend(a, b, map, used, 0)) return map;
  return std::nullopt;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

namespace {

struct CanonState {
  const Graph* g;
  int n;
  int total_bits;
  std::uint64_t best;
  bool have_best;
  std::vector<int> perm;       // position -> vertex
  std::vector<char> used;

  void rec(std::uint64_t cur, int bits) {
    int k = static_cast<int>(perm.size());
    if (k == n) {
      if (!have_best || cur < best) { best = cur; have_best = true; }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::uint64_t ext = 0;
      for (int i = 0; i < k; ++i) ext = (ext << 1) | (g->has_edge(perm[i], v) ? 1u : 0u);
      std::uint64_t cand = (cur << k) | ext;
      int cand_bits = bits + k;
      if (have_best) {
        std::uint64_t best_prefix = best >> (total_bits - cand_bits);
        if (cand > best_prefix) continue;
      }
      perm.push_back(v);
      used[v] = 1;
      rec(cand, cand_bits);
      perm.pop_back();
      used[v] = 0;
    }
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.n > 11) throw std::invalid_argument("canonical_code: n > 11");
  if (g.n <= 1) return 0;
  CanonState st;
  st.g = &g;
  st.n = g.n;
  st.total_bits = g.n * (g.n - 1) / 2;
  st.have_best = false;
  st.best = 0;
  st.used.assign(g.n, 0);
  st.rec(0, 0);
  return st.best;
}

}  // namespace sfdt
