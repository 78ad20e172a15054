#include "sfdt/patterns.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sfdt/io.hpp"

namespace sfdt {

Pattern builtin_pattern(const std::string& name) {
  // vertex order: a b c d h [x [y [z]]] -> 0 1 2 3 4 5 6 7
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  if (name == "fig2a" || name == "fig3a" || name == "fig5a") {
    n = 5;
    edges = {{0, 4}, {4, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}};
  } else if (name == "fig2b") {
    n = 7;
    edges = {{0, 5}, {5, 4}, {4, 6}, {6, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 1}};
  } else if (name == "fig3b") {
    n = 8;
    edges = {{0, 5}, {5, 7}, {7, 4}, {4, 6}, {6, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 1}, {4, 5}};
  } else if (name == "fig3c") {
    n = 8;
    edges = {{0, 7}, {7, 5}, {5, 4}, {4, 6}, {6, 1}, {1, 2}, {2, 3}, {3, 0}, {5, 0}, {0, 4}, {4, 1}};
  } else if (name == "fig5b") {
    n = 7;
    edges = {{0, 6}, {6, 5}, {5, 4}, {4, 1}, {1, 2}, {2, 3}, {3, 0}, {5, 0}, {0, 4}};
  } else {
    throw std::invalid_argument("unknown builtin pattern: " + name);
  }
  Pattern p;
  p.graph = build_graph(n, edges);
  p.host_degree.assign(n, -1);
  return p;
}

Pattern parse_pattern(const std::string& text) {
  // split off "deg V D" lines, parse the rest as an edge list
  std::istringstream in(text);
  std::string line, rest;
  std::vector<std::pair<int, int>> constraints;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (ls >> first && first == "deg") {
      int v, d;
      if (!(ls >> v >> d)) throw ParseError("line " + std::to_string(lineno) + ": bad deg line");
      constraints.emplace_back(v, d);
      rest += "\n";
    } else {
      rest += line;
      rest += "\n";
    }
  }
  Pattern p;
  p.graph = parse_edge_list(rest);
  p.host_degree.assign(p.graph.n, -1);
  for (auto [v, d] : constraints) {
    if (v < 0 || v >= p.graph.n) throw ParseError("pattern: deg constraint vertex out of range");
    p.host_degree[v] = d;
  }
  return p;
}

namespace {

bool match_extend(const Pattern& p, const Graph& g, std::vector<int>& map, std::vector<char>& used, int k) {
  if (k == p.graph.n) return true;
  for (int w = 0; w < g.n; ++w) {
    if (used[w]) continue;
    if (g.degree(w) < p.graph.degree(k)) continue;
    if (p.host_degree[k] >= 0 && g.degree(w) != p.host_degree[k]) continue;
    bool ok = true;
    for (int u : p.graph.adj[k])
      if (u < k && !g.has_edge(map[u], w)) { ok = false; break; }
    if (!ok) continue;
    map[k] = w;
    used[w] = 1;
    if (match_extend(p, g, map, used, k + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_pattern(const Pattern& p, const Graph& g) {
  if (p.graph.n > g.n) return std::nullopt;
  std::vector<int> map(p.graph.n, -1);
  std::vector<char> used(g.n, 0);
  if (match_extend(p, g, map, used, 0)) return map;
  return std::nullopt;
}

namespace {

struct CapSearch {
  const Graph& g;
  int kmin, kmax;
  bool deg4;
  std::vector<int> path;
  std::vector<char> on_path;
  std::optional<Cap> found;

  CapSearch(const Graph& gg, int a, int b, bool d4)
      : g(gg), kmin(a), kmax(b), deg4(d4), on_path(gg.n, 0) {}

  bool vertex_ok(int v) const { return !deg4 || g.degree(v) == 4; }

  // path is a chordless induced path from path[0]; extension vertices stay
  // above path[0] and may touch path[0] only to close the cycle
  void dfs() {
    if (found) return;
    int k = static_cast<int>(path.size());
    int v0 = path[0], last = path.back();
    bool closes = k >= 3 && g.has_edge(last, v0);
    if (closes && k >= kmin && k <= kmax) try_cycle();
    if (found || k == kmax || closes) return;
    for (int u : g.adj[last]) {
      if (u <= v0 || on_path[u]) continue;
      if (!vertex_ok(u)) continue;
      bool chord = false;
      for (int i = 1; i + 1 < k; ++i)
        if (g.has_edge(u, path[i])) { chord = true; break; }
      if (chord) continue;
      path.push_back(u);
      on_path[u] = 1;
      dfs();
      path.pop_back();
      on_path[u] = 0;
      if (found) return;
    }
  }

  void try_cycle() {
    int len = static_cast<int>(path.size());
    for (int u = 0; u < g.n && !found; ++u) {
      if (on_path[u] || !vertex_ok(u)) continue;
      int c1 = -1, c2 = -1, cnt = 0;
      for (int i = 0; i < len; ++i)
        if (g.has_edge(u, path[i])) {
          ++cnt;
          if (cnt == 1) c1 = i;
          else if (cnt == 2) c2 = i;
        }
      if (cnt != 2) continue;
      bool consecutive = (c2 == c1 + 1) || (c1 == 0 && c2 == len - 1);
      if (!consecutive) continue;
      found = Cap{path, u};
    }
  }
};

}  // namespace

std::optional<Cap> find_cap(const Graph& g, int kmin, int kmax, bool require_degree4) {
  if (kmin < 3) throw std::invalid_argument("find_cap: kmin must be >= 3");
  if (kmax < kmin) return std::nullopt;
  CapSearch cs(g, kmin, kmax, require_degree4);
  for (int v0 = 0; v0 < g.n; ++v0) {
    if (!cs.vertex_ok(v0)) continue;
    cs.path = {v0};
    std::fill(cs.on_path.begin(), cs.on_path.end(), 0);
    cs.on_path[v0] = 1;
    cs.dfs();
    if (cs.found) return cs.found;
  }
  return std::nullopt;
}

bool hypothesis_check(const Graph& g, const std::string& family) {
  auto free_of = [&](std::initializer_list<const char*> names) {
    for (const char* nm : names)
      if (find_pattern(builtin_pattern(nm), g).has_value()) return false;
    return true;
  };
  auto no_cycle = [&](int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    Pattern p;
    p.graph = build_graph(k, edges);
    p.host_degree.assign(k, -1);
    return !find_pattern(p, g).has_value();
  };
  if (family == "fig2-free") return free_of({"fig2a", "fig2b"});
  if (family == "fig3-free") return free_of({"fig3a", "fig3b", "fig3c"});
  if (family == "fig5-free") return free_of({"fig5a", "fig5b"});
  if (family == "no-4-cycles") return no_cycle(4);
  if (family == "no-5-cycles") return no_cycle(5);
  throw std::invalid_argument("unknown hypothesis family: " + family);
}

}  // namespace sfdt
