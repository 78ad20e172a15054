// Command-line front end: solve / constructible / detect / discharge /
// verify / gen. Exit codes: 0 success (or property verified), 1 negative
// result (NONE / NO / violations / contradiction), 2 usage or input error.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sfdt/constructible.hpp"
#include "sfdt/cover.hpp"
#include "sfdt/discharge.hpp"
#include "sfdt/embedding.hpp"
#include "sfdt/graph.hpp"
#include "sfdt/io.hpp"
#include "sfdt/patterns.hpp"
#include "sfdt/solver.hpp"
#include "sfdt/verify.hpp"

namespace {

using namespace sfdt;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
  std::cout << "WROTE " << path << "\n";
}

int run_solve(const std::string& cover_path, bool brute, long long budget) {
  Cover c = parse_cover(read_text_file(cover_path));
  auto r = brute ? brute_force_sfdt(c, budget) : find_sfdt(c);
  if (!r) {
    std::cout << "NONE\n";
    return 1;
  }
  std::cout << "SFDT";
  for (int v = 0; v < c.host.n; ++v)
    std::cout << " " << v << ":" << (*r)[v] + 1;
  std::cout << "\n";
  return 0;
}

int run_constructible(const std::string& cover_path) {
  Cover c = parse_cover(read_text_file(cover_path));
  if (auto b = is_building_cover(c)) {
    std::cout << "BUILDING " << to_string(b->tag) << "\n";
    return 0;
  }
  if (is_constructible(c)) {
    std::cout << "CONSTRUCTIBLE\n";
    return 0;
  }
  std::cout << "NO\n";
  return 1;
}

int run_detect(const std::string& graph_path, const std::string& pattern,
               const std::string& pattern_file, const std::vector<int>& cap,
               bool deg4, const std::string& family) {
  Graph g = load_graph_file(graph_path);
  int modes = (!pattern.empty() || !pattern_file.empty() ? 1 : 0) +
              (!cap.empty() ? 1 : 0) + (!family.empty() ? 1 : 0);
  if (modes != 1)
    throw std::invalid_argument(
        "detect needs exactly one of --pattern/--pattern-file, --cap, "
        "--family");
  if (!pattern.empty() || !pattern_file.empty()) {
    Pattern p = !pattern.empty()
                    ? builtin_pattern(pattern)
                    : parse_pattern(read_text_file(pattern_file));
    auto m = find_pattern(p, g);
    if (!m) {
      std::cout << "NONE\n";
      return 1;
    }
    std::cout << "FOUND";
    for (size_t i = 0; i < m->size(); ++i)
      std::cout << " " << i << "->" << (*m)[i];
    std::cout << "\n";
    return 0;
  }
  if (!cap.empty()) {
    auto c = find_cap(g, cap[0], cap[1], deg4);
    if (!c) {
      std::cout << "NONE\n";
      return 1;
    }
    std::cout << "CAP";
    for (int v : c->cycle) std::cout << " " << v;
    std::cout << " APEX " << c->apex << "\n";
    return 0;
  }
  bool ok = hypothesis_check(g, family);
  std::cout << "HYPOTHESIS " << family << " " << (ok ? "HOLDS" : "FAILS")
            << "\n";
  return ok ? 0 : 1;
}

int run_discharge(const std::string& graph_path, const std::string& rot_path,
                  const std::string& scheme,
                  const std::vector<std::string>& hypotheses) {
  Graph g = load_graph_file(graph_path);
  auto rot = parse_rotation_file(read_text_file(rot_path));
  EmbeddedGraph e = make_embedded(g, rot);
  AuditReport rep = discharge_audit(e, scheme_from_string(scheme), hypotheses);
  std::cout << ledger_text(rep.ledger);
  for (const auto& [name, ok] : rep.hypothesis_results)
    std::cout << "HYPOTHESIS " << name << " " << (ok ? "HOLDS" : "FAILS")
              << "\n";
  std::cout << "EULER " << rep.euler << "\n"
            << "MIN_DEGREE " << rep.min_deg << "\n"
            << "CONTRADICTION " << (rep.contradiction_flag ? "yes" : "no")
            << "\n";
  return rep.contradiction_flag ? 1 : 0;
}

int run_verify(const std::string& suite, int nmax, int kappa, int samples,
               std::uint64_t seed, int jobs, bool exhaustive,
               const std::string& family) {
  VerifyReport rep;
  if (suite == "3degenerate") {
    rep = verify_corollary_3degenerate(nmax, jobs);
  } else if (suite == "mr") {
    rep = verify_theorem_mr(nmax, kappa ? kappa : 2, samples, seed, jobs,
                            exhaustive);
  } else if (suite == "dp4") {
    rep = verify_dp4(family.empty() ? "fig3-free-planar" : family, nmax,
                     samples, seed, kappa ? kappa : 4, jobs);
  } else if (suite == "structure") {
    rep = verify_structure(family.empty() ? "fig3-free-planar" : family, nmax,
                           jobs);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  std::cout << rep.to_text();
  return rep.ok() ? 0 : 1;
}

Graph torus_grid(int m, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      edges.push_back({i * n + j, i * n + (j + 1) % n});
      edges.push_back({i * n + j, ((i + 1) % m) * n + j});
    }
  return build_graph(m * n, edges);
}

int run_gen(const std::string& family, const std::string& graph_path,
            int kappa, int p, const std::vector<int>& fconst, int n, int m,
            int k, std::string out) {
  if (out.empty()) out = family;
  if (family == "monoblock") {
    Graph h = load_graph_file(graph_path);
    write_file(out + ".cover", write_cover(make_monoblock(h, kappa)));
  } else if (family == "tilde-complete") {
    write_file(out + ".cover",
               write_cover(make_tilde_complete(p, kappa, fconst)));
  } else if (family == "circular-ladder" || family == "circular") {
    write_file(out + ".cover", write_cover(make_ladder_cover(n, "circular")));
  } else if (family == "mobius-ladder" || family == "mobius") {
    write_file(out + ".cover", write_cover(make_ladder_cover(n, "mobius")));
  } else if (family == "cap") {
    if (k < 3) throw std::invalid_argument("cap needs --k >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
    edges.push_back({k, 0});
    edges.push_back({k, 1});
    write_file(out + ".edges", write_edge_list(build_graph(k + 1, edges)));
  } else if (family == "torus-grid") {
    if (m < 3 || n < 3)
      throw std::invalid_argument("torus-grid needs --m >= 3 and --n >= 3");
    Graph g = torus_grid(m, n);
    write_file(out + ".edges", write_edge_list(g));
    std::vector<std::vector<int>> rot(m * n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        rot[i * n + j] = {i * n + (j + 1) % n, ((i + 1) % m) * n + j,
                          i * n + (j - 1 + n) % n, ((i - 1 + m) % m) * n + j};
    write_file(out + ".rot", write_rotation(rot));
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strictly f-degenerate transversals of graph covers"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "find a transversal of a cover");
  std::string solve_cover;
  bool solve_brute = false;
  long long solve_budget = 10000000;
  solve->add_option("--cover", solve_cover, "cover file")->required();
  solve->add_flag("--brute", solve_brute, "use the exhaustive reference");
  solve->add_option("--budget", solve_budget, "node budget for --brute");

  auto* cons = app.add_subcommand("constructible",
                                  "recognize building/constructible covers");
  std::string cons_cover;
  cons->add_option("--cover", cons_cover, "cover file")->required();

  auto* det = app.add_subcommand("detect", "find patterns, caps, hypotheses");
  std::string det_graph, det_pattern, det_pattern_file, det_family;
  std::vector<int> det_cap;
  bool det_deg4 = false;
  det->add_option("--graph", det_graph, "graph file")->required();
  det->add_option("--pattern", det_pattern, "builtin pattern name");
  det->add_option("--pattern-file", det_pattern_file, "pattern file");
  det->add_option("--cap", det_cap, "cycle length range KMIN KMAX")
      ->expected(2);
  det->add_flag("--deg4", det_deg4, "require host degree 4 on cap vertices");
  det->add_option("--family", det_family,
                  "hypothesis family (fig2-free, no-4-cycles, ...)");

  auto* dis = app.add_subcommand("discharge", "audit a charge scheme");
  std::string dis_graph, dis_rot, dis_scheme;
  std::vector<std::string> dis_hyp;
  dis->add_option("--graph", dis_graph, "graph file")->required();
  dis->add_option("--rotation", dis_rot, "rotation file")->required();
  dis->add_option("--scheme", dis_scheme, "mlone|mltwo|mlthree")->required();
  dis->add_option("--hypotheses", dis_hyp, "families to report")
      ->delimiter(',');

  auto* ver = app.add_subcommand("verify", "run a verification campaign");
  std::string ver_suite, ver_family;
  int ver_nmax = 5, ver_kappa = 0, ver_samples = 20, ver_jobs = 1;
  std::uint64_t ver_seed = 42;
  bool ver_exhaustive = false;
  ver->add_option("--suite", ver_suite, "3degenerate|mr|dp4|structure")
      ->required();
  ver->add_option("--nmax", ver_nmax, "largest host order");
  ver->add_option("--kappa", ver_kappa, "fan size (0 = suite default)");
  ver->add_option("--samples", ver_samples, "covers per graph");
  ver->add_option("--seed", ver_seed, "campaign seed");
  ver->add_option("--jobs", ver_jobs, "worker threads");
  ver->add_flag("--exhaustive", ver_exhaustive,
                "enumerate matchings/capacities instead of sampling");
  ver->add_option("--family", ver_family,
                  "graph family for dp4/structure suites");

  auto* gen = app.add_subcommand("gen", "write named instances to files");
  std::string gen_family, gen_graph, gen_out;
  int gen_kappa = 2, gen_p = 0, gen_n = 0, gen_m = 0, gen_k = 0;
  std::vector<int> gen_fconst;
  gen->add_option("--family", gen_family,
                  "monoblock|tilde-complete|circular-ladder|mobius-ladder|"
                  "cap|torus-grid")
      ->required();
  gen->add_option("--graph", gen_graph, "host graph file (monoblock)");
  gen->add_option("--kappa", gen_kappa, "fan size");
  gen->add_option("--p", gen_p, "complete graph order (tilde-complete)");
  gen->add_option("--fconst", gen_fconst,
                  "per-slot constant capacities (tilde-complete)")
      ->delimiter(',');
  gen->add_option("--n", gen_n, "cycle length / grid columns");
  gen->add_option("--m", gen_m, "grid rows");
  gen->add_option("--k", gen_k, "cap cycle length");
  gen->add_option("--out", gen_out, "output path prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return run_solve(solve_cover, solve_brute, solve_budget);
    if (cons->parsed()) return run_constructible(cons_cover);
    if (det->parsed())
      return run_detect(det_graph, det_pattern, det_pattern_file, det_cap,
                        det_deg4, det_family);
    if (dis->parsed()) return run_discharge(dis_graph, dis_rot, dis_scheme, dis_hyp);
    if (ver->parsed())
      return run_verify(ver_suite, ver_nmax, ver_kappa, ver_samples, ver_seed,
                        ver_jobs, ver_exhaustive, ver_family);
    if (gen->parsed())
      return run_gen(gen_family, gen_graph, gen_kappa, gen_p, gen_fconst,
                     gen_n, gen_m, gen_k, gen_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
