#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jr {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

using Arc = std::pair<Vertex, Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Class tag carried by a Digraph. Only the structural invariants of the tag
// are enforced at construction; the tag never changes the reachability
// semantics.
enum class Kind {
  kDigraph,
  kPath,     // dipath
  kOutTree,
  kInTree,
  kUTree,    // tree in the undirected sense, arbitrary orientation
  kPlanarSt,
};

std::string_view kind_name(Kind kind);
Kind parse_kind(std::string_view name);

// Immutable simple digraph over 0..n-1. Self-loops and duplicate arcs are
// dropped on construction; arcs are kept sorted.
class Digraph {
 public:
  Digraph() = default;
  Digraph(Vertex n, std::vector<Arc> arcs, Kind kind = Kind::kDigraph);

  // Planar st-graphs carry, per vertex, the clockwise (left-to-right) order
  // of its out-neighbours. Every out-arc must appear exactly once.
  Digraph(Vertex n, std::vector<Arc> arcs,
          std::vector<std::vector<Vertex>> out_order);

  Vertex n() const { return n_; }
  std::size_t m() const { return arcs_.size(); }
  // |G| = vertices + arcs.
  std::size_t size() const { return static_cast<std::size_t>(n_) + m(); }
  Kind kind() const { return kind_; }

  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const Vertex> out(Vertex v) const {
    return {out_adj_.data() + out_off_[v], out_adj_.data() + out_off_[v + 1]};
  }
  std::span<const Vertex> in(Vertex v) const {
    return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
  }
  std::size_t out_degree(Vertex v) const { return out_off_[v + 1] - out_off_[v]; }
  std::size_t in_degree(Vertex v) const { return in_off_[v + 1] - in_off_[v]; }
  bool has_arc(Vertex u, Vertex v) const;

  // Clockwise out-arc order; empty unless kind() == kPlanarSt.
  const std::vector<std::vector<Vertex>>& out_order() const { return out_order_; }

  // Same arcs, retagged. Validates the new tag.
  Digraph with_kind(Kind kind) const;
  Digraph reversed() const;

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

 private:
  void validate_kind() const;

  Vertex n_ = 0;
  Kind kind_ = Kind::kDigraph;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_off_{0};
  std::vector<std::size_t> in_off_{0};
  std::vector<Vertex> out_adj_;
  std::vector<Vertex> in_adj_;
  std::vector<std::vector<Vertex>> out_order_;
};

bool is_acyclic(const Digraph& g);
// Kahn order; throws Error if g has a cycle.
std::vector<Vertex> topological_order(const Digraph& g);
bool is_weakly_connected(const Digraph& g);
// True iff the underlying undirected graph is a tree.
bool is_undirected_tree(const Digraph& g);
// True iff the underlying undirected graph is a simple path.
bool is_undirected_path(const Digraph& g);

// Vertex order along a dipath, source first. Throws if g is not a dipath.
std::vector<Vertex> dipath_order(const Digraph& g);
// r_P(v) for a dipath: number of predecessors minus one.
std::vector<Vertex> dipath_ranks(const Digraph& g);

// Undirected rooted view of a rooted (in- or out-) tree.
struct RootedTree {
  Vertex root = kNoVertex;
  std::vector<Vertex> parent;                 // kNoVertex at the root
  std::vector<std::vector<Vertex>> children;  // increasing id
  bool out = true;                            // arcs point away from root

  Vertex n() const { return static_cast<Vertex>(parent.size()); }
};

// Accepts out-trees, in-trees and dipaths (a dipath is an out-tree rooted at
// its source). Throws Error otherwise.
RootedTree rooted_tree(const Digraph& g);
// Builds a rooted tree from a parent array (kNoVertex marks the root).
RootedTree rooted_tree_from_parents(std::vector<Vertex> parent, bool out);

// Structural equality on n, kind and arc set.
bool operator==(const Digraph& a, const Digraph& b);

}  // namespace jr
