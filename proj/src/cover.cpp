#include "sfdt/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfdt {

Cover make_cover(const Graph& host, int kappa) {
  if (kappa < 1) throw std::invalid_argument("cover: kappa must be >= 1");
  Cover c;
  c.host = host;
  c.kappa = kappa;
  c.f.assign(host.n, std::vector<int>(kappa, 0));
  auto es = host.edges();
  c.fwd.assign(es.size(), std::vector<int>(kappa, -1));
  c.bwd.assign(es.size(), std::vector<int>(kappa, -1));
  c.eid.assign(static_cast<size_t>(host.n) * host.n, -1);
  for (size_t i = 0; i < es.size(); ++i) {
    auto [u, v] = es[i];
    c.eid[u * host.n + v] = static_cast<int>(i);
    c.eid[v * host.n + u] = static_cast<int>(i);
  }
  return c;
}

void set_match(Cover& c, int u, int qu, int v, int qv) {
  if (u < 0 || u >= c.host.n || v < 0 || v >= c.host.n || u == v)
    throw std::invalid_argument("set_match: bad endpoints");
  if (qu < 0 || qu >= c.kappa || qv < 0 || qv >= c.kappa)
    throw std::invalid_argument("set_match: slot out of range");
  int e = c.edge_id(u, v);
  if (e < 0) throw std::invalid_argument("set_match: not a host edge");
  if (u > v) { std::swap(u, v); std::swap(qu, qv); }
  if (c.fwd[e][qu] != -1 || c.bwd[e][qv] != -1)
    throw std::invalid_argument("set_match: slot already matched on this edge");
  c.fwd[e][qu] = qv;
  c.bwd[e][qv] = qu;
}

Cover cover_from_lists(const Graph& g, const std::vector<std::vector<int>>& lists) {
  if (static_cast<int>(lists.size()) != g.n)
    throw std::invalid_argument("cover_from_lists: one list per vertex required");
  int kappa = 1;
  for (const auto& l : lists)
    for (int col : l) {
      if (col < 1) throw std::invalid_argument("cover_from_lists: colors are 1-based");
      kappa = std::max(kappa, col);
    }
  Cover c = make_cover(g, kappa);
  for (int v = 0; v < g.n; ++v)
    for (int col : lists[v]) c.f[v][col - 1] = 1;
  for (auto [u, v] : g.edges())
    for (int col : lists[u])
      if (std::find(lists[v].begin(), lists[v].end(), col) != lists[v].end())
        set_match(c, u, col - 1, v, col - 1);
  return c;
}

Kernel kernel(const Cover& c) {
  Kernel k;
  std::vector<std::vector<int>> idx(c.host.n, std::vector<int>(c.kappa, -1));
  for (int v = 0; v < c.host.n; ++v)
    for (int q = 0; q < c.kappa; ++q)
      if (c.f[v][q] > 0) {
        idx[v][q] = static_cast<int>(k.labels.size());
        k.labels.emplace_back(v, q);
      }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : c.host.edges())
    for (int qu = 0; qu < c.kappa; ++qu) {
      int qv = c.matched(u, qu, v);
      if (qv != -1 && idx[u][qu] != -1 && idx[v][qv] != -1)
        edges.emplace_back(idx[u][qu], idx[v][qv]);
    }
  k.graph = build_graph(static_cast<int>(k.labels.size()), edges);
  return k;
}

Cover restrict_cover(const Cover& c, const std::vector<int>& S) {
  auto sub = induced_subgraph(c.host, S);
  Cover r = make_cover(sub.graph, c.kappa);
  for (int i = 0; i < sub.graph.n; ++i) r.f[i] = c.f[sub.to_parent[i]];
  for (auto [a, b] : sub.graph.edges()) {
    int u = sub.to_parent[a], v = sub.to_parent[b];
    for (int qu = 0; qu < c.kappa; ++qu) {
      int qv = c.matched(u, qu, v);
      if (qv != -1) set_match(r, a, qu, b, qv);
    }
  }
  return r;
}

std::vector<int> fsum_profile(const Cover& c) {
  std::vector<int> s(c.host.n);
  for (int v = 0; v < c.host.n; ++v) s[v] = c.fsum(v);
  return s;
}

bool peel_check(const Cover& c, const std::vector<int>& choice, const std::vector<char>& active) {
  const int n = c.host.n;
  std::vector<int> deg(n, 0);
  std::vector<char> alive(active.begin(), active.end());
  int remaining = 0;
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    ++remaining;
    for (int u : c.host.adj[v])
      if (alive[u] && c.matched(v, choice[v], u) == choice[u]) ++deg[v];
  }
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (alive[v] && deg[v] < c.f[v][choice[v]]) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    --remaining;
    for (int u : c.host.adj[v])
      if (alive[u] && c.matched(v, choice[v], u) == choice[u]) {
        if (--deg[u] < c.f[u][choice[u]] && deg[u] + 1 >= c.f[u][choice[u]]) queue.push_back(u);
      }
  }
  return remaining == 0;
}

bool is_strictly_f_degenerate(const Cover& c, const std::vector<int>& r) {
  if (static_cast<int>(r.size()) != c.host.n)
    throw std::invalid_argument("transversal: one choice per host vertex required");
  for (int v = 0; v < c.host.n; ++v)
    if (r[v] < 0 || r[v] >= c.kappa)
      throw std::invalid_argument("transversal: slot out of range");
  return peel_check(c, r, std::vector<char>(c.host.n, 1));
}

}  // namespace sfdt
