#include "sfdt/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sfdt/constructible.hpp"
#include "sfdt/enumerate.hpp"
#include "sfdt/io.hpp"
#include "sfdt/patterns.hpp"
#include "sfdt/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sfdt {

std::uint64_t SplitMix::next() {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int SplitMix::below(int n) {
  return static_cast<int>(next() % static_cast<std::uint64_t>(n));
}

double SplitMix::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t item_seed(std::uint64_t master, std::uint64_t a,
                        std::uint64_t b) {
  SplitMix m{master};
  m.s ^= m.next() + a * 0x9e3779b97f4a7c15ULL;
  m.s ^= m.next() + b * 0xc2b2ae3d27d4eb4fULL;
  return m.next();
}

namespace {

// All ways to write total as kappa ordered nonnegative parts, each <= cap.
void compositions(int total, int kappa, int cap, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == kappa - 1) {
    if (total <= cap) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int a = 0; a <= std::min(total, cap); ++a) {
    cur.push_back(a);
    compositions(total - a, kappa, cap, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> all_compositions(int total, int kappa,
                                               int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(total, kappa, cap < 0 ? total : cap, cur, out);
  return out;
}

void shuffle_all(std::vector<int>& v, SplitMix& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
    std::swap(v[i], v[rng.below(i + 1)]);
}

struct Item {
  long long covers = 0;
  std::vector<std::string> violations;
};

// Deterministic fan-out over graphs: results land in per-index slots, so
// aggregation order never depends on scheduling.
template <typename Fn>
std::vector<Item> run_items(int count, int jobs, Fn fn) {
  std::vector<Item> out(count);
#ifdef _OPENMP
  if (jobs > 1) {
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
#endif
  (void)jobs;
  for (int i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

VerifyReport finish(VerifyReport rep, const std::vector<Item>& items) {
  for (const auto& it : items) {
    rep.covers_checked += it.covers;
    for (const auto& v : it.violations) rep.violations.push_back(v);
  }
  return rep;
}

std::string pattern_family(const std::string& family) {
  if (family == "fig2-free-planar") return "fig2-free";
  if (family == "fig3-free-planar") return "fig3-free";
  if (family == "no4cycles-planar") return "no-4-cycles";
  throw std::invalid_argument("unknown verify family: " + family);
}

std::vector<Graph> family_graphs(const std::string& family, int nmax) {
  std::string pat = pattern_family(family);
  std::vector<Graph> out;
  for (int n = 1; n <= nmax; ++n)
    for (Graph& g : enumerate_graphs_upto_iso(n, true))
      if (is_planar(g) && hypothesis_check(g, pat)) out.push_back(std::move(g));
  return out;
}

}  // namespace

Cover sample_cover(const Graph& g, const CoverSampleSpec& spec,
                   SplitMix& rng) {
  if (spec.kappa < 1) throw std::invalid_argument("kappa must be positive");
  Cover c = make_cover(g, spec.kappa);
  for (int v = 0; v < g.n; ++v) {
    int total = spec.fixed_fsum >= 0
                    ? spec.fixed_fsum
                    : g.degree(v) + (spec.fsum_extra_max > 0
                                         ? rng.below(spec.fsum_extra_max + 1)
                                         : 0);
    auto options = all_compositions(total, spec.kappa, spec.f_cap);
    if (options.empty())
      throw std::invalid_argument("capacity cap too small for requested fsum");
    c.f[v] = options[rng.below(static_cast<int>(options.size()))];
  }
  std::vector<int> uq(spec.kappa), vq(spec.kappa);
  for (auto [u, v] : g.edges()) {
    std::iota(uq.begin(), uq.end(), 0);
    std::iota(vq.begin(), vq.end(), 0);
    shuffle_all(uq, rng);
    shuffle_all(vq, rng);
    int size = spec.kappa;
    if (rng.unit() >= spec.full_match_prob) size = rng.below(spec.kappa + 1);
    for (int i = 0; i < size; ++i) set_match(c, u, uq[i], v, vq[i]);
  }
  return c;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "SUITE " << suite << "\n";
  for (const auto& [k, v] : params) os << "PARAM " << k << " " << v << "\n";
  os << "GRAPHS " << graphs_checked << "\n";
  os << "COVERS " << covers_checked << "\n";
  for (const auto& v : violations) os << "VIOLATION " << v << "\n";
  os << "VIOLATIONS " << violations.size() << "\n";
  os << "RESULT " << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

VerifyReport verify_corollary_3degenerate(int nmax, int jobs) {
  VerifyReport rep;
  rep.suite = "3degenerate";
  rep.params = {{"nmax", std::to_string(nmax)}};
  std::vector<Graph> graphs = family_graphs("fig2-free-planar", nmax);
  rep.graphs_checked = static_cast<long long>(graphs.size());
  auto items = run_items(
      static_cast<int>(graphs.size()), jobs, [&](int i) {
        Item it;
        if (!is_k_degenerate(graphs[i], 3))
          it.violations.push_back("graph " + write_graph6(graphs[i]) +
                                  " is not 3-degenerate");
        return it;
      });
  return finish(std::move(rep), items);
}

VerifyReport verify_theorem_mr(int nmax, int kappa, int covers_per_graph,
                               std::uint64_t seed, int jobs,
                               bool exhaustive) {
  if (exhaustive && (nmax > 5 || kappa > 2))
    throw std::invalid_argument(
        "exhaustive matching sweeps need nmax <= 5 and kappa <= 2");
  VerifyReport rep;
  rep.suite = "mr";
  rep.params = {{"nmax", std::to_string(nmax)},
                {"kappa", std::to_string(kappa)},
                {"samples", std::to_string(exhaustive ? 0 : covers_per_graph)},
                {"seed", std::to_string(seed)},
                {"mode", exhaustive ? "exhaustive" : "sampled"}};
  std::vector<Graph> graphs;
  for (int n = 1; n <= nmax; ++n)
    for (Graph& g : enumerate_graphs_upto_iso(n, true))
      graphs.push_back(std::move(g));
  rep.graphs_checked = static_cast<long long>(graphs.size());

  auto check_one = [](const Cover& c, const std::string& label, Item& it) {
    ++it.covers;
    try {
      MrReport r = theorem_mr_check(c);
      if (!r.consistent)
        it.violations.push_back(
            label + (r.constructible ? " constructible yet solvable"
                                     : " non-constructible yet unsolvable"));
    } catch (const BudgetExceeded& ex) {
      it.violations.push_back(label + " budget exceeded: " + ex.what());
    }
  };

  auto items = run_items(
      static_cast<int>(graphs.size()), jobs, [&](int gi) {
        Item it;
        const Graph& g = graphs[gi];
        std::string id = "mr graph " + write_graph6(g);
        if (exhaustive) {
          // Every assignment of a full matching per edge x every split of
          // each degree into kappa capacities.
          auto edges = g.edges();
          int m = static_cast<int>(edges.size());
          std::vector<std::vector<std::vector<int>>> splits(g.n);
          for (int v = 0; v < g.n; ++v)
            splits[v] = all_compositions(g.degree(v), kappa, -1);
          std::vector<size_t> pick(g.n, 0);
          for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
            std::fill(pick.begin(), pick.end(), 0);
            bool more = true;
            while (more) {
              Cover c = make_cover(g, kappa);
              for (int v = 0; v < g.n; ++v) c.f[v] = splits[v][pick[v]];
              for (int ei = 0; ei < m; ++ei) {
                auto [u, v] = edges[ei];
                bool swapq = kappa == 2 && (mask >> ei & 1);
                for (int q = 0; q < kappa; ++q)
                  set_match(c, u, q, v, swapq ? kappa - 1 - q : q);
              }
              check_one(c, id, it);
              int v = 0;
              for (; v < g.n; ++v) {
                if (++pick[v] < splits[v].size()) break;
                pick[v] = 0;
              }
              more = v < g.n;
            }
            if (kappa < 2) break;  // a single full matching exists
          }
        } else {
          for (int ci = 0; ci < covers_per_graph; ++ci) {
            SplitMix rng{item_seed(seed, gi, ci)};
            CoverSampleSpec spec;
            spec.kappa = kappa;
            spec.fsum_extra_max = ci % 2;  // alternate exact / padded sums
            Cover c = sample_cover(g, spec, rng);
            check_one(c, id + " sample " + std::to_string(ci), it);
          }
        }
        return it;
      });
  return finish(std::move(rep), items);
}

VerifyReport verify_dp4(const std::string& family, int nmax,
                        int covers_per_graph, std::uint64_t seed, int kappa,
                        int jobs, double full_match_prob) {
  VerifyReport rep;
  rep.suite = "dp4";
  rep.params = {{"family", family},
                {"nmax", std::to_string(nmax)},
                {"samples", std::to_string(covers_per_graph)},
                {"seed", std::to_string(seed)},
                {"kappa", std::to_string(kappa)}};
  std::vector<Graph> graphs = family_graphs(family, nmax);
  rep.graphs_checked = static_cast<long long>(graphs.size());
  int cap = family == "fig2-free-planar" ? 1 : 2;
  auto items = run_items(
      static_cast<int>(graphs.size()), jobs, [&](int gi) {
        Item it;
        const Graph& g = graphs[gi];
        for (int ci = 0; ci < covers_per_graph; ++ci) {
          SplitMix rng{item_seed(seed, gi, ci)};
          CoverSampleSpec spec;
          spec.kappa = kappa;
          spec.fixed_fsum = 4;
          spec.f_cap = cap;
          spec.full_match_prob = full_match_prob;
          Cover c = sample_cover(g, spec, rng);
          ++it.covers;
          if (!find_sfdt(c))
            it.violations.push_back("dp4 graph " + write_graph6(g) +
                                    " sample " + std::to_string(ci) +
                                    " has no transversal");
        }
        return it;
      });
  return finish(std::move(rep), items);
}

VerifyReport verify_structure(const std::string& family, int nmax, int jobs) {
  VerifyReport rep;
  rep.suite = "structure";
  rep.params = {{"family", family}, {"nmax", std::to_string(nmax)}};
  std::vector<Graph> graphs = family_graphs(family, nmax);
  rep.graphs_checked = static_cast<long long>(graphs.size());
  auto items = run_items(
      static_cast<int>(graphs.size()), jobs, [&](int i) {
        Item it;
        const Graph& g = graphs[i];
        if (min_degree(g) <= 3) return it;
        bool ok = false;
        if (family == "no4cycles-planar")
          ok = find_cap(g, 5, g.n, true).has_value();
        else if (family == "fig3-free-planar")
          ok = find_cap(g, 5, 5, true).has_value();
        // fig2-free-planar: minimum degree <= 3 always; no cap escape hatch.
        if (!ok)
          it.violations.push_back("structure graph " + write_graph6(g) +
                                  " has min degree >= 4 and no required cap");
        return it;
      });
  return finish(std::move(rep), items);
}

}  // namespace sfdt
