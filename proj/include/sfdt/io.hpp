#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sfdt/cover.hpp"
#include "sfdt/graph.hpp"

namespace sfdt {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph6 (one graph per string, n <= 62 here)
std::string write_graph6(const Graph& g);
Graph parse_graph6(const std::string& line);

// Edge list: first line "n m", then one "u v" per line, 0-based; '#' comments.
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

// Cover file. Line forms (slots 1-based in the file):
//   kappa K / vertices N / edge U V / match U V QU QV / f V Q VALUE
// kappa+vertices must precede dependent lines; matches only on declared edges;
// unlisted f values default to 0.
std::string write_cover(const Cover& c);
Cover parse_cover(const std::string& text);

// Rotation file: "vertices N", then "rot V W1 ... Wd" per vertex.
// Validation against the companion graph happens in make_embedded.
std::string write_rotation(const std::vector<std::vector<int>>& rotation);
std::vector<std::vector<int>> parse_rotation_file(const std::string& text);

// Reads a graph from a file that is either an edge list or a graph6 line
// (".g6" suffix or a first line that is not "n m").
Graph load_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace sfdt
