#pragma once

#include <iosfwd>
#include <vector>

#include "jr/graph.hpp"

namespace jr {

// Vertex-disjoint dipaths covering every vertex.
struct PathCover {
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> path_of;  // v -> path index
  std::vector<Vertex> rank;     // v -> position on its path

  Vertex kappa() const { return static_cast<Vertex>(paths.size()); }
};

// Minimum cover via maximum matching on the split graph (Hopcroft-Karp).
// Throws Error on a cyclic input.
PathCover min_path_cover(const Digraph& g);
// Repeatedly peels a longest path of the remaining graph.
PathCover greedy_path_cover(const Digraph& g);
// Builds path_of/rank from a list of paths.
PathCover cover_from_paths(Vertex n, std::vector<std::vector<Vertex>> paths);
bool is_valid_cover(const Digraph& g, const PathCover& pc);

// from(v, i): rank of the highest-ranked vertex of path i reaching v, or
// kNoVertex if no vertex of path i reaches v.
struct FromRanks {
  Vertex n = 0;
  Vertex kappa = 0;
  std::vector<Vertex> from;  // row-major, v * kappa + i

  Vertex at(Vertex v, Vertex i) const {
    return from[static_cast<std::size_t>(v) * kappa + i];
  }
};

FromRanks from_ranks(const Digraph& g, const PathCover& pc);

void write_cover(std::ostream& out, const PathCover& pc);
PathCover read_cover(std::istream& in, Vertex n);

}  // namespace jr
