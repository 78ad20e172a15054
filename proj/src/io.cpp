#include "sfdt/io.hpp"

#include <fstream>
#include <sstream>

namespace sfdt {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

// Splits into whitespace tokens after removing comments.
std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(strip_comment(line));
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

int to_int(const std::string& s, int lineno) {
  size_t used = 0;
  int v;
  try {
    v = std::stoi(s, &used);
  } catch (...) {
    throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + s + "'");
  }
  if (used != s.size())
    throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + s + "'");
  return v;
}

}  // namespace

std::string write_graph6(const Graph& g) {
  if (g.n > 62) throw std::invalid_argument("graph6: n > 62 unsupported");
  std::string out;
  out.push_back(static_cast<char>(g.n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph parse_graph6(const std::string& line) {
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw ParseError("graph6: empty string");
  int n = s[0] - 63;
  if (n < 0 || n > 62) throw ParseError("graph6: unsupported vertex count byte");
  int need = (n * (n - 1) / 2 + 5) / 6;
  if (static_cast<int>(s.size()) != 1 + need)
    throw ParseError("graph6: wrong length for declared vertex count");
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      char c = s[1 + bit / 6];
      if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
      if (((c - 63) >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  return build_graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 2)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'n m' header");
      n = to_int(tok[0], lineno);
      m = to_int(tok[1], lineno);
      if (n < 0 || m < 0)
        throw ParseError("line " + std::to_string(lineno) + ": negative header counts");
      continue;
    }
    if (tok.size() != 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v' edge");
    edges.emplace_back(to_int(tok[0], lineno), to_int(tok[1], lineno));
  }
  if (n < 0) throw ParseError("edge list: missing 'n m' header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("edge list: declared " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  try {
    return build_graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string write_cover(const Cover& c) {
  std::ostringstream out;
  out << "kappa " << c.kappa << "\n";
  out << "vertices " << c.host.n << "\n";
  for (auto [u, v] : c.host.edges()) out << "edge " << u << " " << v << "\n";
  for (auto [u, v] : c.host.edges())
    for (int qu = 0; qu < c.kappa; ++qu) {
      int qv = c.matched(u, qu, v);
      if (qv != -1) out << "match " << u << " " << v << " " << qu + 1 << " " << qv + 1 << "\n";
    }
  for (int v = 0; v < c.host.n; ++v)
    for (int q = 0; q < c.kappa; ++q)
      if (c.f[v][q] != 0) out << "f " << v << " " << q + 1 << " " << c.f[v][q] << "\n";
  return out.str();
}

Cover parse_cover(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int kappa = -1, nverts = -1;
  std::vector<std::pair<int, int>> edges;
  struct MatchLine { int u, v, qu, qv, lineno; };
  struct FLine { int v, q, val, lineno; };
  std::vector<MatchLine> matches;
  std::vector<FLine> fvals;

  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    const std::string err = "line " + std::to_string(lineno) + ": ";
    if (tok[0] == "kappa") {
      if (tok.size() != 2 || kappa != -1) throw ParseError(err + "bad kappa line");
      kappa = to_int(tok[1], lineno);
      if (kappa < 1) throw ParseError(err + "kappa must be >= 1");
    } else if (tok[0] == "vertices") {
      if (tok.size() != 2 || nverts != -1) throw ParseError(err + "bad vertices line");
      nverts = to_int(tok[1], lineno);
      if (nverts < 0) throw ParseError(err + "negative vertex count");
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw ParseError(err + "bad edge line");
      if (nverts < 0) throw ParseError(err + "edge before vertices line");
      edges.emplace_back(to_int(tok[1], lineno), to_int(tok[2], lineno));
    } else if (tok[0] == "match") {
      if (tok.size() != 5) throw ParseError(err + "bad match line");
      if (kappa < 0 || nverts < 0) throw ParseError(err + "match before kappa/vertices");
      matches.push_back({to_int(tok[1], lineno), to_int(tok[2], lineno), to_int(tok[3], lineno),
                         to_int(tok[4], lineno), lineno});
    } else if (tok[0] == "f") {
      if (tok.size() != 4) throw ParseError(err + "bad f line");
      if (kappa < 0 || nverts < 0) throw ParseError(err + "f before kappa/vertices");
      fvals.push_back({to_int(tok[1], lineno), to_int(tok[2], lineno), to_int(tok[3], lineno), lineno});
    } else {
      throw ParseError(err + "unknown directive '" + tok[0] + "'");
    }
  }
  if (kappa < 0) throw ParseError("cover: missing kappa line");
  if (nverts < 0) throw ParseError("cover: missing vertices line");

  Graph host;
  try {
    host = build_graph(nverts, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("cover: ") + e.what());
  }
  Cover c = make_cover(host, kappa);
  for (const auto& ml : matches) {
    const std::string err = "line " + std::to_string(ml.lineno) + ": ";
    if (ml.u < 0 || ml.u >= nverts || ml.v < 0 || ml.v >= nverts)
      throw ParseError(err + "match vertex out of range");
    if (c.edge_id(ml.u, ml.v) < 0) throw ParseError(err + "match on undeclared edge");
    if (ml.qu < 1 || ml.qu > kappa || ml.qv < 1 || ml.qv > kappa)
      throw ParseError(err + "match slot out of range 1..kappa");
    try {
      set_match(c, ml.u, ml.qu - 1, ml.v, ml.qv - 1);
    } catch (const std::invalid_argument& e) {
      throw ParseError(err + e.what());
    }
  }
  for (const auto& fl : fvals) {
    const std::string err = "line " + std::to_string(fl.lineno) + ": ";
    if (fl.v < 0 || fl.v >= nverts) throw ParseError(err + "f vertex out of range");
    if (fl.q < 1 || fl.q > kappa) throw ParseError(err + "f slot out of range 1..kappa");
    if (fl.val < 0) throw ParseError(err + "negative capacity");
    c.f[fl.v][fl.q - 1] = fl.val;
  }
  return c;
}

std::string write_rotation(const std::vector<std::vector<int>>& rotation) {
  std::ostringstream out;
  out << "vertices " << rotation.size() << "\n";
  for (size_t v = 0; v < rotation.size(); ++v) {
    out << "rot " << v;
    for (int w : rotation[v]) out << " " << w;
    out << "\n";
  }
  return out.str();
}

std::vector<std::vector<int>> parse_rotation_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int nverts = -1;
  std::vector<std::vector<int>> rot;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    const std::string err = "line " + std::to_string(lineno) + ": ";
    if (tok[0] == "vertices") {
      if (tok.size() != 2 || nverts != -1) throw ParseError(err + "bad vertices line");
      nverts = to_int(tok[1], lineno);
      if (nverts < 0) throw ParseError(err + "negative vertex count");
      rot.assign(nverts, {});
      seen.assign(nverts, 0);
    } else if (tok[0] == "rot") {
      if (nverts < 0) throw ParseError(err + "rot before vertices line");
      if (tok.size() < 2) throw ParseError(err + "bad rot line");
      int v = to_int(tok[1], lineno);
      if (v < 0 || v >= nverts) throw ParseError(err + "rot vertex out of range");
      if (seen[v]) throw ParseError(err + "duplicate rot line for vertex " + std::to_string(v));
      seen[v] = 1;
      for (size_t i = 2; i < tok.size(); ++i) {
        int w = to_int(tok[i], lineno);
        if (w < 0 || w >= nverts) throw ParseError(err + "rot neighbor out of range");
        rot[v].push_back(w);
      }
    } else {
      throw ParseError(err + "unknown directive '" + tok[0] + "'");
    }
  }
  if (nverts < 0) throw ParseError("rotation: missing vertices line");
  return rot;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph_file(const std::string& path) {
  std::string text = read_text_file(path);
  bool g6 = path.size() >= 3 && path.substr(path.size() - 3) == ".g6";
  if (!g6) {
    // An edge-list header is digits and blanks only (after comments), and
    // graph6 bytes all sit above both the digit range and '#', so the first
    // surviving line decides the format.
    std::istringstream in(text);
    std::string line, first;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      first = line;
      break;
    }
    if (!first.empty() &&
        first.find_first_not_of("0123456789 \t\r") == std::string::npos)
      return parse_edge_list(text);
    g6 = true;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) return parse_graph6(line);
  throw ParseError("graph6 file is empty: " + path);
}

}  // namespace sfdt
