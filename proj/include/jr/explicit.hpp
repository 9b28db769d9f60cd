#pragma once

#include <filesystem>
#include <iosfwd>
#include <utility>
#include <vector>

#include "jr/closure.hpp"
#include "jr/condense.hpp"
#include "jr/graph.hpp"

namespace jr {

// Where a Steiner vertex came from. `group` is the piece pair or cover-path
// pair, `depth` the recursion depth, `dim` the number of coordinates still
// being split when it was created (0 for tree wiring), `side` 1 for the
// upper half of a split. [lo, hi] is the coordinate range of the recursion
// segment and `mid` its split value.
struct SteinerTag {
  int group = 0;
  int depth = 0;
  int dim = 0;
  int side = 0;
  int lo = 0;
  int mid = 0;
  int hi = 0;

  friend bool operator==(const SteinerTag&, const SteinerTag&) = default;
};

// Original vertices are 0..original_count-1; vertex original_count + i is
// the Steiner vertex tagged steiner[i].
struct JoinGraph {
  Digraph graph;
  Vertex original_count = 0;
  std::vector<SteinerTag> steiner;

  Vertex steiner_count() const { return static_cast<Vertex>(steiner.size()); }
  std::size_t size() const { return graph.size(); }
};

// Bit-reversal lower-bound pair: p1 is 0 -> 1 -> ... -> n-1 and the rank of
// v in p2 is the beta-bit reversal of v.
std::pair<Digraph, Digraph> gen_bitreversal(Vertex n);
Vertex bit_reverse(Vertex x, int bits);

// Dipaths or unoriented paths.
JoinGraph build_two_paths(const Digraph& p1, const Digraph& p2);
// A rooted tree and a path, in either order.
JoinGraph build_tree_path(const Digraph& t1, const Digraph& p2);
// Two rooted trees, any orientations.
JoinGraph build_two_trees(const Digraph& t1, const Digraph& t2);
// Two trees in the undirected sense, any arc orientations.
JoinGraph build_unoriented_trees(const Digraph& g1, const Digraph& g2);
// g1 acyclic; g2 a dipath (one cover of g1) or acyclic (covers of both).
JoinGraph build_pathcover(const Digraph& g1, const Digraph& g2);

struct VerifyReport {
  bool ok = true;
  Vertex a = kNoVertex;  // first violating pair in row-major order
  Vertex b = kNoVertex;
  bool in_join = false;
  bool expected = false;
};

VerifyReport verify_join_graph(const JoinGraph& j, const Digraph& g1,
                               const Digraph& g2);
VerifyReport verify_join_graph(const JoinGraph& j, const ReachMatrix& expected);

// Lifts a join graph built on a condensed pair back to the original
// vertices: every subcomponent becomes a cycle through its members in id
// order and stands in for its smallest member.
JoinGraph expand_condensed(const JoinGraph& hat, const CondensedPair& cp);

// Graph format followed by `steiner k` and one tag per line.
void write_join_graph(std::ostream& out, const JoinGraph& j);
JoinGraph read_join_graph(std::istream& in);
void save_join_graph(const std::filesystem::path& path, const JoinGraph& j);
JoinGraph load_join_graph(const std::filesystem::path& path);

}  // namespace jr
