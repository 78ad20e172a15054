#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "sfdt/graph.hpp"

namespace sfdt {

namespace {

// Face-insertion planarity test (Demoucron/Malgrange/Pertuiset) on a
// 2-connected graph: keep a partial embedding as its face list, repeatedly
// place a path of some unembedded fragment into an admissible face; a
// fragment with a single admissible face is forced and handled first.
class FaceInsertion {
 public:
  explicit FaceInsertion(const Graph& g) : g_(g) {}

  bool run() {
    const int n = g_.n;
    const int m = g_.m();
    if (m > 3 * n - 6) return false;

    embedded_v_.assign(n, 0);
    auto cyc = initial_cycle();
    for (int v : cyc) embedded_v_[v] = 1;
    for (size_t i = 0; i < cyc.size(); ++i)
      mark_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
    faces_.push_back(cyc);
    faces_.push_back(cyc);

    while (static_cast<int>(embedded_e_.size()) < m) {
      auto frags = fragments();
      // pick a forced fragment if one exists
      int chosen = -1, chosen_face = -1;
      for (size_t i = 0; i < frags.size(); ++i) {
        auto adm = admissible(frags[i]);
        if (adm.empty()) return false;
        if (adm.size() == 1) { chosen = static_cast<int>(i); chosen_face = adm[0]; break; }
        if (chosen == -1) { chosen = static_cast<int>(i); chosen_face = adm[0]; }
      }
      embed_path(find_path(frags[chosen]), chosen_face);
    }
    return true;
  }

 private:
  struct Fragment {
    std::vector<int> inner;    // non-embedded vertices (empty for a chord)
    std::vector<int> attach;   // embedded vertices touching the fragment, sorted
    std::pair<int, int> chord{-1, -1};
  };

  const Graph& g_;
  std::vector<char> embedded_v_;
  std::set<std::pair<int, int>> embedded_e_;
  std::vector<std::vector<int>> faces_;

  void mark_edge(int u, int v) { embedded_e_.insert({std::min(u, v), std::max(u, v)}); }
  bool edge_embedded(int u, int v) const {
    return embedded_e_.count({std::min(u, v), std::max(u, v)}) > 0;
  }

  std::vector<int> initial_cycle() {
    // DFS until a back edge closes a cycle; 2-connected, so one exists.
    std::vector<int> parent(g_.n, -1), state(g_.n, 0), order;
    std::function<std::vector<int>(int)> dfs = [&](int u) -> std::vector<int> {
      state[u] = 1;
      for (int w : g_.adj[u]) {
        if (w == parent[u]) continue;
        if (state[w] == 1) {
          std::vector<int> cyc{u};
          for (int x = u; x != w; x = parent[x]) cyc.push_back(parent[x]);
          std::reverse(cyc.begin(), cyc.end());
          return cyc;
        }
        if (state[w] == 0) {
          parent[w] = u;
          auto r = dfs(w);
          if (!r.empty()) return r;
        }
      }
      state[u] = 2;
      return {};
    };
    auto cyc = dfs(0);
    if (cyc.size() < 3) throw std::logic_error("face insertion: no cycle in 2-connected graph");
    return cyc;
  }

  std::vector<Fragment> fragments() const {
    std::vector<Fragment> out;
    // chords: unembedded edges with both endpoints embedded
    for (auto [u, v] : g_.edges())
      if (embedded_v_[u] && embedded_v_[v] && !edge_embedded(u, v)) {
        Fragment f;
        f.attach = {u, v};
        f.chord = {u, v};
        out.push_back(std::move(f));
      }
    // components of g minus embedded vertices, plus their attachments
    std::vector<int> comp(g_.n, -1);
    for (int s = 0; s < g_.n; ++s) {
      if (embedded_v_[s] || comp[s] != -1) continue;
      Fragment f;
      std::vector<int> stack{s};
      comp[s] = 1;
      std::set<int> att;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        f.inner.push_back(u);
        for (int w : g_.adj[u]) {
          if (embedded_v_[w]) att.insert(w);
          else if (comp[w] == -1) { comp[w] = 1; stack.push_back(w); }
        }
      }
      f.attach.assign(att.begin(), att.end());
      std::sort(f.inner.begin(), f.inner.end());
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<int> admissible(const Fragment& f) const {
    std::vector<int> out;
    for (size_t i = 0; i < faces_.size(); ++i) {
      std::set<int> fv(faces_[i].begin(), faces_[i].end());
      bool ok = true;
      for (int a : f.attach)
        if (!fv.count(a)) { ok = false; break; }
      if (ok) out.push_back(static_cast<int>(i));
    }
    return out;
  }

  // A path through the fragment between two distinct attachments. The BFS
  // stays inside this fragment's inner vertices so it cannot drift into a
  // different fragment sharing the attachment.
  std::vector<int> find_path(const Fragment& f) const {
    if (f.chord.first != -1) return {f.chord.first, f.chord.second};
    std::vector<char> inner(g_.n, 0);
    for (int v : f.inner) inner[v] = 1;
    int a1 = f.attach[0];
    std::vector<int> prev(g_.n, -1);
    std::deque<int> q;
    std::vector<char> seen(g_.n, 0);
    seen[a1] = 1;
    for (int w : g_.adj[a1])
      if (inner[w] && !seen[w]) { seen[w] = 1; prev[w] = a1; q.push_back(w); }
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : g_.adj[u]) {
        if (seen[w]) continue;
        if (embedded_v_[w]) {
          if (w == a1) continue;
          std::vector<int> path{w};
          for (int x = u; x != -1; x = prev[x]) path.push_back(x);
          std::reverse(path.begin(), path.end());
          return path;                      // runs a1 ... w
        }
        if (!inner[w]) continue;
        seen[w] = 1;
        prev[w] = u;
        q.push_back(w);
      }
    }
    throw std::logic_error("face insertion: fragment with a single attachment");
  }

  void embed_path(const std::vector<int>& path, int face_idx) {
    int a1 = path.front(), a2 = path.back();
    for (size_t i = 0; i + 1 < path.size(); ++i) mark_edge(path[i], path[i + 1]);
    for (size_t i = 1; i + 1 < path.size(); ++i) embedded_v_[path[i]] = 1;

    const std::vector<int> face = faces_[face_idx];
    int sz = static_cast<int>(face.size());
    int i1 = -1, i2 = -1;
    for (int i = 0; i < sz; ++i) {
      if (face[i] == a1) i1 = i;
      if (face[i] == a2) i2 = i;
    }
    std::vector<int> arc1, arc2;  // a1..a2 and a2..a1 along the face
    for (int i = i1; ; i = (i + 1) % sz) { arc1.push_back(face[i]); if (i == i2) break; }
    for (int i = i2; ; i = (i + 1) % sz) { arc2.push_back(face[i]); if (i == i1) break; }

    std::vector<int> f1 = arc1, f2 = arc2;
    for (size_t i = path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
    for (size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
    faces_[face_idx] = std::move(f1);
    faces_.push_back(std::move(f2));
  }
};

}  // namespace

bool is_planar(const Graph& g) {
  if (g.n <= 4) return true;
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    auto blocks = blocks_and_cut_vertices(sub.graph);
    for (size_t b = 0; b < blocks.block_vertices.size(); ++b) {
      if (blocks.block_edges[b].size() <= 2) continue;
      auto blk = induced_subgraph(sub.graph, blocks.block_vertices[b]);
      // a block with >= 3 edges and no cut vertex is 2-connected; the induced
      // subgraph on its vertex set equals the block itself
      if (blk.graph.n > 4 && !FaceInsertion(blk.graph).run()) return false;
    }
  }
  return true;
}

}  // namespace sfdt
