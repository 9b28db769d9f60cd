#pragma once

#include <filesystem>
#include <iosfwd>

#include "jr/graph.hpp"

namespace jr {

// Text format:
//   n m kind
//   u v            (m lines, 0-based)
//   v: w1 w2 ...   (planar-st only; one line per vertex, clockwise out-arcs)
Digraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Digraph& g);

Digraph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Digraph& g);

}  // namespace jr
