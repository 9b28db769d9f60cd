#pragma once

#include <cstdint>
#include <vector>

#include "jr/graph.hpp"

namespace jr {

enum class Role : std::uint8_t { kAbsent, kRoot, kCore, kFringe };

// One 2-layered digraph G^i of the layer decomposition, induced by layers
// L_i and L_{i+1} plus a root r0. For i > 0 the root is the contraction of
// all earlier layers; for i = 0 it is v0 itself.
struct LayerGraph {
  Digraph graph;                   // local ids, local 0 is the root
  std::vector<Vertex> original;    // local -> original, kNoVertex for r0
  std::vector<Role> role;          // local -> role
  // Tree inputs only: for a fringe vertex, the local id of the core vertex
  // its fringe tree hangs from. kNoVertex otherwise.
  std::vector<Vertex> fringe_root;
  bool contracted_root = false;
  // Even-indexed graphs have a core reachable from the root (an out-tree for
  // tree inputs); odd-indexed graphs have a core reaching the root.
  bool core_out = true;

  Vertex local_count() const { return graph.n(); }
};

struct LayerDecomposition {
  Vertex v0 = kNoVertex;
  std::vector<std::vector<Vertex>> layers;  // L_0 .. L_{mu-1}
  std::vector<Vertex> iota;                 // vertex -> layer index
  std::vector<LayerGraph> graphs;           // G^0 .. G^{mu-1}
  bool tree_input = false;

  Vertex mu() const { return static_cast<Vertex>(layers.size()); }

  // Local id of v in G^i, or kNoVertex. v0 is local 0 of G^0.
  Vertex local_of(Vertex v, Vertex i) const;
  Role role(Vertex v, Vertex i) const;
  // Graph indices in which v appears as a real (non-contracted) vertex:
  // iota(v) - 1 (if any) and iota(v).
  std::vector<Vertex> graphs_of(Vertex v) const;

  // Sum over i of |G^i|.
  std::size_t total_size() const;

 private:
  friend LayerDecomposition layer_decompose(const Digraph&, Vertex);
  std::vector<Vertex> local_in_own_;   // local id in G^{iota(v)}
  std::vector<Vertex> local_in_prev_;  // local id in G^{iota(v)-1}
};

// Thorup-style layering from root v0. Requires a weakly connected input that
// is acyclic or an unoriented tree. Every predecessor of v lies in
// G^{iota(v)-1} or G^{iota(v)}, and reaches v inside that graph.
LayerDecomposition layer_decompose(const Digraph& g, Vertex v0);
// Uses the lowest-numbered vertex as v0.
LayerDecomposition layer_decompose(const Digraph& g);

}  // namespace jr
