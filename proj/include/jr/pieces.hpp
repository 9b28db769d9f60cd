#pragma once

#include <cstdint>
#include <vector>

#include "jr/graph.hpp"
#include "jr/tree.hpp"

namespace jr {

// Which side of a join relation a vertex may take inside one piece.
enum Flag : std::uint8_t { kSource = 1, kTarget = 2, kBoth = 3 };

// A rooted piece of a path- or tree-shaped input: a dipath, a rooted tree,
// a maximal subpath of an unoriented path, or one 2-layered graph of a layer
// decomposition with its fringe trees folded into the core. Reachability
// between a source and a target of the same piece is tree ancestry (root
// side first for out-pieces and chains, leaf side first for in-pieces).
struct Piece {
  RootedTree tree;                   // local ids
  bool chain = false;                // tree is a dipath; local id = rank
  std::vector<Vertex> original;      // local -> original, kNoVertex if none
  std::vector<std::uint8_t> flags;   // local -> Flag bits
  Vertex layer = kNoVertex;          // layer index for layer pieces
};

struct PieceSet {
  std::vector<Piece> pieces;
  // original -> (piece, local) memberships; at most two per vertex.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> member_of;
  bool layered = false;
};

// Maximal uniformly oriented subpaths, each listed source first. Every vertex
// lies in at most two of them.
std::vector<std::vector<Vertex>> split_unoriented_path(const Digraph& p);

// Lowest-numbered vertex without in-arcs.
Vertex lowest_source(const Digraph& g);

// Accepts dipaths, rooted trees, unoriented paths and unoriented trees.
PieceSet decompose_pieces(const Digraph& g);

struct PairItem {
  Vertex vertex;
  Vertex local1;
  Vertex local2;
  std::uint8_t flags;  // AND of the two pieces' flags, nonzero
};

struct PiecePair {
  Vertex piece1;
  Vertex piece2;
  std::vector<PairItem> items;  // increasing vertex
};

// All piece pairs sharing at least one vertex that is a source or a target
// in both.
std::vector<PiecePair> pair_pieces(const PieceSet& a, const PieceSet& b);

}  // namespace jr
