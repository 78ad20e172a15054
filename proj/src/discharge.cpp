#include "sfdt/discharge.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sfdt/patterns.hpp"

namespace sfdt {

Scheme scheme_from_string(const std::string& s) {
  if (s == "mlone") return Scheme::mlone;
  if (s == "mltwo") return Scheme::mltwo;
  if (s == "mlthree") return Scheme::mlthree;
  throw std::invalid_argument("unknown scheme: " + s);
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::mlone: return "mlone";
    case Scheme::mltwo: return "mltwo";
    default: return "mlthree";
  }
}

std::string ChargeLedger::element_name(int id) const {
  if (id < n_vertices) return "v" + std::to_string(id);
  if (id < n_vertices + n_faces) return "f" + std::to_string(id - n_vertices);
  return "bank" + std::to_string(id - n_vertices - n_faces);
}

Rat ChargeLedger::sum_initial() const {
  return std::accumulate(initial.begin(), initial.end(), Rat(0));
}

Rat ChargeLedger::sum_final() const {
  return std::accumulate(final_charge.begin(), final_charge.end(), Rat(0));
}

std::vector<int> ChargeLedger::negatives() const {
  std::vector<int> out;
  for (int i = 0; i < elements(); ++i)
    if (final_charge[i] < Rat(0)) out.push_back(i);
  return out;
}

std::string ledger_text(const ChargeLedger& led) {
  std::ostringstream os;
  os << "SCHEME " << to_string(led.scheme) << "\n";
  for (const auto& w : led.warnings) os << "WARN " << w << "\n";
  for (int i = 0; i < led.elements(); ++i)
    os << "ELEM " << led.element_name(i) << " INIT " << led.initial[i].str()
       << " FINAL " << led.final_charge[i].str() << "\n";
  for (const auto& t : led.transfers)
    os << "XFER " << t.rule << " " << led.element_name(t.src) << " -> "
       << led.element_name(t.dst) << " " << t.amount.str() << "\n";
  for (const auto& c : led.classifications) os << "CLASS " << c << "\n";
  os << "SUM_INITIAL " << led.sum_initial().str() << " SUM_FINAL "
     << led.sum_final().str() << " NEGATIVES " << led.negatives().size()
     << "\n";
  return os.str();
}

namespace {

// Per-embedding face bookkeeping. Each directed edge lies on exactly one
// face boundary walk; the face across undirected {u,v} from the face using
// direction (u,v) is the one using (v,u).
struct FaceInfo {
  std::vector<int> deg;                       // face degrees
  std::map<std::pair<int, int>, int> side;    // directed edge -> face
  std::vector<int> tri_count;                 // per vertex: incident 3-faces

  explicit FaceInfo(const EmbeddedGraph& e) {
    int nf = static_cast<int>(e.faces.size());
    deg.resize(nf);
    tri_count.assign(e.g.n, 0);
    for (int fi = 0; fi < nf; ++fi) {
      const auto& walk = e.faces[fi];
      int d = static_cast<int>(walk.size());
      deg[fi] = d;
      for (int k = 0; k < d; ++k)
        side[{walk[k], walk[(k + 1) % d]}] = fi;
      if (d == 3)
        for (int v : walk) ++tri_count[v];
    }
  }

  // Face opposite face fi across the walk edge (u,v) of fi.
  int opposite(int u, int v) const { return side.at({v, u}); }
};

struct Builder {
  const EmbeddedGraph& e;
  const FaceInfo& fi;
  ChargeLedger& led;

  int face_id(int f) const { return led.n_vertices + f; }
  int bank_id(int b) const { return led.n_vertices + led.n_faces + b; }

  void move(int src, int dst, Rat amt, const char* rule) {
    if (amt == Rat(0)) return;
    led.transfers.push_back({src, dst, amt, rule});
  }
};

// Shared by the two vertex/face charge schemes with 3-face rules
// (initial charge deg-4 everywhere). For each 3-face:
//  R1: all three neighboring faces have degree >= 5 -> 1/3 from each.
//  R2: per edge (w1,w2) shared with another 3-face: if both endpoints have
//      degree 4 the face receives 1/2 from each of its 5+-face neighbors,
//      otherwise 1/3 from each 5+-face neighbor and 1/3 from each 5+-vertex
//      among {w1,w2}.
void apply_triangle_rules(Builder& b) {
  const Graph& g = b.e.g;
  int nf = static_cast<int>(b.e.faces.size());
  for (int f = 0; f < nf; ++f) {
    if (b.fi.deg[f] != 3) continue;
    const auto& walk = b.e.faces[f];
    int opp[3];
    for (int j = 0; j < 3; ++j)
      opp[j] = b.fi.opposite(walk[j], walk[(j + 1) % 3]);
    bool all5 = true;
    for (int j = 0; j < 3; ++j) all5 = all5 && b.fi.deg[opp[j]] >= 5;
    if (all5) {
      for (int j = 0; j < 3; ++j)
        b.move(b.face_id(opp[j]), b.face_id(f), Rat(1, 3), "R1");
      continue;
    }
    for (int j = 0; j < 3; ++j) {
      if (b.fi.deg[opp[j]] != 3) continue;
      int w1 = walk[j], w2 = walk[(j + 1) % 3];
      bool both4 = g.degree(w1) == 4 && g.degree(w2) == 4;
      for (int k = 0; k < 3; ++k)
        if (b.fi.deg[opp[k]] >= 5)
          b.move(b.face_id(opp[k]), b.face_id(f), both4 ? Rat(1, 2) : Rat(1, 3),
                 "R2");
      if (!both4)
        for (int w : {w1, w2})
          if (g.degree(w) >= 5) b.move(w, b.face_id(f), Rat(1, 3), "R2");
    }
  }
}

void apply_mlthree_rules(Builder& b) {
  apply_triangle_rules(b);
  const Graph& g = b.e.g;
  int nf = static_cast<int>(b.e.faces.size());
  for (int f = 0; f < nf; ++f) {
    if (b.fi.deg[f] != 5) continue;
    const auto& walk = b.e.faces[f];
    int alpha = 0;          // adjacent 3-faces, with multiplicity
    std::vector<int> tri_edges;
    for (int j = 0; j < 5; ++j)
      if (b.fi.deg[b.fi.opposite(walk[j], walk[(j + 1) % 5])] == 3) {
        ++alpha;
        tri_edges.push_back(j);
      }
    std::vector<int> big;   // incident 5+-vertices
    for (int v : walk)
      if (g.degree(v) >= 5) big.push_back(v);

    if (big.empty()) {
      // All five corners are 4-vertices: sink rule. The face receives 1/6
      // from the apex of each adjacent 3-face whose apex is a 5+-vertex
      // (such an apex is never a corner of f, every corner having degree 4).
      if (alpha >= 4) {
        for (int j : tri_edges) {
          int w1 = walk[j], w2 = walk[(j + 1) % 5];
          int t = b.fi.opposite(w1, w2);
          int apex = -1;
          for (int v : b.e.faces[t])
            if (v != w1 && v != w2) apex = v;
          if (apex >= 0 && g.degree(apex) >= 5) {
            b.move(apex, b.face_id(f), Rat(1, 6), "R3");
            b.led.classifications.push_back(
                "related-source v" + std::to_string(apex) + " sink f" +
                std::to_string(f) + " via f" + std::to_string(t));
          }
        }
      }
      continue;
    }

    // 5-face with at least one 5+-vertex: classify (classes are mutually
    // exclusive since they require alpha = 5, 4, 3 respectively).
    const char* cls = nullptr;
    Rat per(0);
    int nbig = static_cast<int>(big.size());
    if (alpha == 5) {
      cls = "5a";
      per = Rat(2, 3 * nbig);
    } else if (alpha == 4) {
      cls = "5b";
      per = Rat(1, 3 * nbig);
    } else if (alpha == 3) {
      bool cond = false;
      for (int j : tri_edges) {
        int t = b.fi.opposite(walk[j], walk[(j + 1) % 5]);
        const auto& tw = b.e.faces[t];
        for (int k = 0; k < 3 && !cond; ++k) {
          int a = tw[k], c = tw[(k + 1) % 3];
          int o = b.fi.opposite(a, c);
          if (o != f && b.fi.deg[o] == 3 && g.degree(a) == 4 &&
              g.degree(c) == 4)
            cond = true;
        }
        if (cond) break;
      }
      if (cond) {
        cls = "5c";
        per = Rat(1, 6);
      }
    }
    if (cls) {
      b.led.classifications.push_back("face f" + std::to_string(f) + " " +
                                      cls);
      const char* rule = alpha == 5 ? "R4" : (alpha == 4 ? "R5" : "R6");
      for (int v : big) b.move(v, b.face_id(f), per, rule);
    }
  }
}

void apply_mltwo_rules(Builder& b, const AuxGraphH& aux) {
  const Graph& g = b.e.g;
  int nf = static_cast<int>(b.e.faces.size());
  // R1: every face spreads its initial charge evenly over its corners.
  for (int f = 0; f < nf; ++f) {
    Rat amt(2 * b.fi.deg[f] - 6, b.fi.deg[f]);
    for (int v : b.e.faces[f]) b.move(b.face_id(f), v, amt, "R1");
  }
  std::vector<char> is_bad(g.n, 0);
  for (int v : aux.bad_vertices) is_bad[v] = 1;
  // R2: good corners of each bad 3-face pay 2/5 into that face's bank.
  for (size_t bi = 0; bi < aux.bad_faces.size(); ++bi) {
    int f = aux.bad_faces[bi];
    int bank = b.bank_id(aux.component[bi]);
    for (int v : b.e.faces[f])
      if (!is_bad[v]) b.move(v, bank, Rat(2, 5), "R2");
  }
  // R3: each bank pays 2/5 to each bad vertex of its component.
  for (size_t k = 0; k < aux.bad_vertices.size(); ++k) {
    int comp = aux.component[aux.vertex_faces[k].first];
    b.move(b.bank_id(comp), aux.bad_vertices[k], Rat(2, 5), "R3");
  }
}

}  // namespace

AuxGraphH aux_graph_h(const EmbeddedGraph& e) {
  FaceInfo fi(e);
  const Graph& g = e.g;
  AuxGraphH aux;
  // Bad vertices and, per bad vertex, its two incident 3-faces.
  std::vector<std::vector<int>> tris(g.n);
  for (size_t f = 0; f < e.faces.size(); ++f)
    if (fi.deg[f] == 3)
      for (int v : e.faces[f]) tris[v].push_back(static_cast<int>(f));
  std::vector<char> is_bad(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 4 && fi.tri_count[v] == 2) {
      is_bad[v] = 1;
      aux.bad_vertices.push_back(v);
    }
  std::map<int, int> face_idx;  // host face -> index in bad_faces
  for (size_t f = 0; f < e.faces.size(); ++f) {
    if (fi.deg[f] != 3) continue;
    bool bad = false;
    for (int v : e.faces[f]) bad = bad || is_bad[v];
    if (bad) {
      face_idx[static_cast<int>(f)] = static_cast<int>(aux.bad_faces.size());
      aux.bad_faces.push_back(static_cast<int>(f));
    }
  }
  for (int v : aux.bad_vertices)
    aux.vertex_faces.push_back({face_idx.at(tris[v][0]), face_idx.at(tris[v][1])});

  // Components of the multigraph (nodes: bad faces, edges: bad vertices).
  int k = static_cast<int>(aux.bad_faces.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : aux.vertex_faces) parent[find(a)] = find(b);
  std::map<int, int> root_id;
  aux.component.resize(k);
  for (int i = 0; i < k; ++i) {
    int r = find(i);
    auto it = root_id.find(r);
    if (it == root_id.end()) it = root_id.insert({r, aux.n_components++}).first;
    aux.component[i] = it->second;
  }
  // Classify each component: multigraph cycle, tree, or other.
  std::vector<int> nodes(aux.n_components, 0), edges(aux.n_components, 0);
  std::vector<std::vector<int>> degs(aux.n_components);
  std::vector<int> node_deg(k, 0);
  for (const auto& [a, b] : aux.vertex_faces) {
    ++node_deg[a];
    ++node_deg[b];
    ++edges[aux.component[a]];
  }
  for (int i = 0; i < k; ++i) {
    ++nodes[aux.component[i]];
    degs[aux.component[i]].push_back(node_deg[i]);
  }
  for (int c = 0; c < aux.n_components; ++c) {
    bool all2 = std::all_of(degs[c].begin(), degs[c].end(),
                            [](int d) { return d == 2; });
    if (edges[c] == nodes[c] && all2)
      aux.component_type.push_back("cycle");
    else if (edges[c] == nodes[c] - 1)
      aux.component_type.push_back("tree");
    else
      aux.component_type.push_back("other");
  }
  return aux;
}

ChargeLedger initial_charges(const EmbeddedGraph& e, Scheme s) {
  ChargeLedger led;
  led.scheme = s;
  led.n_vertices = e.g.n;
  led.n_faces = static_cast<int>(e.faces.size());
  led.n_banks = s == Scheme::mltwo
                    ? aux_graph_h(e).n_components
                    : 0;
  led.initial.assign(led.elements(), Rat(0));
  for (int v = 0; v < e.g.n; ++v)
    led.initial[v] = Rat(e.g.degree(v) - (s == Scheme::mltwo ? 6 : 4));
  for (int f = 0; f < led.n_faces; ++f) {
    int d = e.face_degree(f);
    led.initial[led.n_vertices + f] =
        Rat(s == Scheme::mltwo ? 2 * d - 6 : d - 4);
  }
  led.final_charge = led.initial;
  // Internal consistency: with F faces the sum telescopes to a multiple of
  // the Euler characteristic.
  int mult = s == Scheme::mltwo ? -6 : -4;
  if (led.sum_initial() != Rat(mult * euler_characteristic(e)))
    throw std::logic_error("initial charge sum disagrees with Euler formula");
  return led;
}

ChargeLedger run_discharge(const EmbeddedGraph& e, Scheme s) {
  ChargeLedger led = initial_charges(e, s);
  AuxGraphH aux = aux_graph_h(e);
  led.rules_applied = is_2connected(e.g) && faces_all_simple(e);
  if (s == Scheme::mltwo) {
    for (int c = 0; c < aux.n_components; ++c)
      led.classifications.push_back("bank" + std::to_string(c) + " " +
                                    aux.component_type[c]);
    for (int v : aux.bad_vertices)
      led.classifications.push_back("bad-vertex v" + std::to_string(v));
    for (int f : aux.bad_faces)
      led.classifications.push_back("bad-face f" + std::to_string(f));
  }
  if (!led.rules_applied) {
    led.warnings.push_back(
        "rules need a 2-connected embedding with simple faces; "
        "conservation-only ledger");
    return led;
  }
  FaceInfo fi(e);
  Builder b{e, fi, led};
  switch (s) {
    case Scheme::mlone: apply_triangle_rules(b); break;
    case Scheme::mlthree: apply_mlthree_rules(b); break;
    case Scheme::mltwo: apply_mltwo_rules(b, aux); break;
  }
  for (const auto& t : led.transfers) {
    led.final_charge[t.src] -= t.amount;
    led.final_charge[t.dst] += t.amount;
  }
  if (led.sum_final() != led.sum_initial())
    throw std::logic_error("discharge transfers failed to conserve charge");
  return led;
}

AuditReport discharge_audit(const EmbeddedGraph& e, Scheme s,
                            const std::vector<std::string>& hypotheses) {
  AuditReport rep;
  rep.scheme = s;
  rep.ledger = run_discharge(e, s);
  rep.rules_applied = rep.ledger.rules_applied;
  rep.min_deg = e.g.n ? min_degree(e.g) : 0;
  rep.euler = euler_characteristic(e);
  rep.conservation_ok = rep.ledger.sum_final() == rep.ledger.sum_initial();
  for (int id : rep.ledger.negatives())
    rep.negative_elements.push_back(rep.ledger.element_name(id));
  for (const auto& h : hypotheses)
    rep.hypothesis_results.push_back({h, hypothesis_check(e.g, h)});

  AuxGraphH aux = aux_graph_h(e);
  if (s == Scheme::mltwo) {
    rep.aux_component_types = aux.component_type;
    for (const auto& t : aux.component_type)
      rep.aux_components_ok = rep.aux_components_ok && t != "other";
    if (rep.rules_applied)
      for (int c = 0; c < aux.n_components; ++c)
        if (aux.component_type[c] == "tree" &&
            rep.ledger.final_charge[rep.ledger.n_vertices +
                                    rep.ledger.n_faces + c] != Rat(6, 5))
          rep.bank_identity_ok = false;
  }

  // Tripwire: under each theorem's hypotheses the proofs force every final
  // charge to be nonnegative, yet the total equals a fixed negative number
  // on the relevant surfaces. A negative-free ledger whose total is still
  // negative can therefore only mean broken bookkeeping. Likewise a
  // hypothesis-satisfying input whose auxiliary components are neither
  // cycles nor trees, a tree bank missing its exact surplus, or any
  // conservation failure.
  bool hyp_ok = rep.min_deg >= 4;
  bool surface_ok = false;
  switch (s) {
    case Scheme::mlone:
      hyp_ok = hyp_ok && hypothesis_check(e.g, "fig2-free");
      surface_ok = rep.euler == 2 ||
                   (rep.euler == 0 &&
                    !(is_2connected(e.g) && is_regular(e.g, 4)));
      break;
    case Scheme::mltwo:
      hyp_ok = hyp_ok && hypothesis_check(e.g, "no-4-cycles") &&
               !find_cap(e.g, 5, e.g.n, true).has_value();
      surface_ok = rep.euler == 2 || rep.euler == 0;
      break;
    case Scheme::mlthree:
      hyp_ok = hyp_ok && hypothesis_check(e.g, "fig3-free") &&
               !find_cap(e.g, 5, 5, true).has_value();
      surface_ok = rep.euler == 2;
      break;
  }
  bool neg_free_deficit = rep.rules_applied && hyp_ok && surface_ok &&
                          rep.negative_elements.empty() &&
                          rep.ledger.sum_final() < Rat(0);
  bool aux_broken =
      s == Scheme::mltwo && rep.rules_applied && hyp_ok && !rep.aux_components_ok;
  rep.contradiction_flag =
      neg_free_deficit || aux_broken || !rep.bank_identity_ok ||
      !rep.conservation_ok;
  return rep;
}

}  // namespace sfdt
