#include "sfdt/solver.hpp"

#include <algorithm>

#include "sfdt/graph.hpp"

namespace sfdt {

std::optional<std::vector<int>> brute_force_sfdt(const Cover& c, long long budget) {
  const int n = c.host.n;
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= c.kappa;
    if (total > budget)
      throw BudgetExceeded("brute force: kappa^n exceeds budget " + std::to_string(budget));
  }
  std::vector<int> choice(n, 0);
  for (long long it = 0; it < total; ++it) {
    if (peel_check(c, choice, std::vector<char>(n, 1))) return choice;
    // odometer, last position fastest: lexicographic ascending
    for (int v = n - 1; v >= 0; --v) {
      if (++choice[v] < c.kappa) break;
      choice[v] = 0;
    }
  }
  return std::nullopt;
}

namespace {

struct CoreSearch {
  const Cover& c;
  const std::vector<char>& active;
  std::vector<int>& choice;            // -1 = unassigned; only active entries used
  std::vector<int> order_pool;         // active vertices

  explicit CoreSearch(const Cover& cc, const std::vector<char>& act, std::vector<int>& ch)
      : c(cc), active(act), choice(ch) {
    for (int v = 0; v < c.host.n; ++v)
      if (active[v]) order_pool.push_back(v);
  }

  int pick_vertex() const {
    int best = -1, best_colored = -1, best_deg = -1;
    for (int v : order_pool) {
      if (choice[v] != -1) continue;
      int colored = 0, deg = 0;
      for (int u : c.host.adj[v])
        if (active[u]) {
          ++deg;
          if (choice[u] != -1) ++colored;
        }
      if (colored > best_colored || (colored == best_colored && deg > best_deg)) {
        best = v;
        best_colored = colored;
        best_deg = deg;
      }
    }
    return best;
  }

  bool dfs(int assigned) {
    if (assigned == static_cast<int>(order_pool.size()))
      return peel_check(c, choice, active);
    int v = pick_vertex();
    for (int q = 0; q < c.kappa; ++q) {
      if (c.f[v][q] == 0) continue;  // a 0-capacity pick is a stuck singleton
      if (c.f[v][q] == 1) {
        // skip if some chosen matched neighbor is also capacity-1: stuck pair
        bool stuck = false;
        for (int u : c.host.adj[v]) {
          if (!active[u] || choice[u] == -1) continue;
          if (c.matched(v, q, u) == choice[u] && c.f[u][choice[u]] == 1) { stuck = true; break; }
        }
        if (stuck) continue;
      }
      choice[v] = q;
      if (dfs(assigned + 1)) return true;
      choice[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_sfdt(const Cover& c) {
  const int n = c.host.n;
  std::vector<char> active(n, 1);
  std::vector<int> cur_deg(n);
  for (int v = 0; v < n; ++v) cur_deg[v] = c.host.degree(v);

  // reduction: defer any vertex whose total capacity beats its current degree
  std::vector<int> deferred;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!active[v] || c.fsum(v) <= cur_deg[v]) continue;
      active[v] = 0;
      deferred.push_back(v);
      for (int u : c.host.adj[v])
        if (active[u]) --cur_deg[u];
      changed = true;
      break;
    }
  }

  std::vector<int> choice(n, -1);
  CoreSearch core(c, active, choice);
  if (!core.dfs(0)) return std::nullopt;

  // reinsert deferred vertices, most recently deferred first
  std::vector<char> placed(active.begin(), active.end());
  for (auto it = deferred.rbegin(); it != deferred.rend(); ++it) {
    int v = *it;
    // count chosen matched neighbors per slot
    std::vector<int> cnt(c.kappa, 0);
    for (int u : c.host.adj[v])
      if (placed[u])
        for (int q = 0; q < c.kappa; ++q)
          if (c.matched(v, q, u) == choice[u]) ++cnt[q];
    int best_q = -1, best_margin = 0;
    for (int q = 0; q < c.kappa; ++q) {
      int margin = c.f[v][q] - cnt[q];
      if (margin > best_margin) { best_margin = margin; best_q = q; }
    }
    placed[v] = 1;
    bool ok = false;
    if (best_q != -1) {
      choice[v] = best_q;
      ok = peel_check(c, choice, placed);
    }
    if (!ok) {
      // fallback: try every slot (greedy choice is guaranteed by the degree
      // argument, but validate-and-fall-back keeps correctness independent)
      for (int q = 0; q < c.kappa && !ok; ++q) {
        choice[v] = q;
        ok = peel_check(c, choice, placed);
      }
    }
    if (!ok) return std::nullopt;  // unreachable by the degree argument
  }

  if (!is_strictly_f_degenerate(c, choice)) return std::nullopt;  // final guard
  return choice;
}

bool is_minimal_non_sfd(const Cover& c) {
  if (find_sfdt(c).has_value()) return false;
  for (int v = 0; v < c.host.n; ++v) {
    std::vector<int> keep;
    for (int u = 0; u < c.host.n; ++u)
      if (u != v) keep.push_back(u);
    if (!find_sfdt(restrict_cover(c, keep)).has_value()) return false;
  }
  return true;
}

MinimalPairReport check_theorem_L(const Cover& c, const std::vector<int>& F) {
  MinimalPairReport rep;
  if (!is_minimal_non_sfd(c)) {
    rep.pre_message = "cover is not a minimal non-SFD pair";
    return rep;
  }
  for (int v : F)
    if (v < 0 || v >= c.host.n) {
      rep.pre_message = "F vertex out of range";
      return rep;
    }
  for (int v : F)
    if (c.fsum(v) < c.host.degree(v)) {
      rep.pre_message = "F reaches outside the fsum >= deg set";
      return rep;
    }
  auto sub = induced_subgraph(c.host, F);
  if (!is_2connected(sub.graph)) {
    rep.pre_message = "F does not induce a 2-connected subgraph";
    return rep;
  }
  rep.pre_ok = true;

  rep.i_holds = is_connected(c.host);
  for (int v = 0; v < c.host.n && rep.i_holds; ++v)
    if (c.fsum(v) > c.host.degree(v)) rep.i_holds = false;

  if (is_cycle(sub.graph) || is_complete(sub.graph)) {
    rep.ii_holds = true;
  } else {
    rep.ii_holds = true;
    for (int i = 0; i < sub.graph.n && rep.ii_holds; ++i) {
      int fmax = 0;
      for (int q = 0; q < c.kappa; ++q) fmax = std::max(fmax, c.f[sub.to_parent[i]][q]);
      if (sub.graph.degree(i) > fmax) rep.ii_holds = false;
    }
  }
  return rep;
}

}  // namespace sfdt
