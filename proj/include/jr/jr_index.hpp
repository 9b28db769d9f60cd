#pragma once

#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "jr/geom.hpp"
#include "jr/graph.hpp"

namespace jr {

enum class IndexClass {
  kTwoPaths,
  kTreePath,
  kTwoTrees,
  kPathcover,
  kPlanarSt,
  kHpdTwoTrees,
};

std::string_view index_class_name(IndexClass cls);
IndexClass parse_index_class(std::string_view name);

// Reachability labels of a planar st-graph from a leftmost-first and a
// rightmost-first depth-first search: a reaches b iff l1(a) <= l1(b) and
// l2(a) <= l2(b). Labels lie in [1, n].
struct KamedaLabels {
  std::vector<Vertex> l1;
  std::vector<Vertex> l2;
};

// Throws Error unless g has one source and one sink. For n <= 4096 the
// labels are checked against the closure and an Error is thrown on any
// mismatch.
KamedaLabels kameda_labels(const Digraph& g);
bool kameda_property_holds(const Digraph& g, const KamedaLabels& labels);

// Immutable join-reachability query structure over two graphs.
class JRIndex {
 public:
  struct Impl;

  JRIndex() = default;

  IndexClass variant() const;
  Vertex n() const;

  // {a : a reaches b in both graphs}, sorted, b included.
  std::vector<Vertex> query(Vertex b, QueryStats* stats = nullptr) const;

  // Number of secondary structures and, for piece-pair variants, the
  // (first-graph piece, second-graph piece) a structure id stands for.
  std::size_t structure_count() const;
  std::pair<Vertex, Vertex> describe_structure(Vertex id) const;

 private:
  explicit JRIndex(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend JRIndex make_index(std::shared_ptr<const Impl>);

  std::shared_ptr<const Impl> impl_;
};

// Paths (dipaths or unoriented).
JRIndex index_two_paths(const Digraph& p1, const Digraph& p2);
// A rooted or unoriented tree and a path, in either order.
JRIndex index_tree_path(const Digraph& t1, const Digraph& p2);
// Two trees, rooted in any orientation or unoriented.
JRIndex index_two_trees(const Digraph& t1, const Digraph& t2);
// g1 acyclic; g2 a dipath, a rooted tree or acyclic.
JRIndex index_pathcover(const Digraph& g1, const Digraph& g2);
// g1 a planar st-graph with its out-arc order, p2 a dipath.
JRIndex index_planar_st(const Digraph& g1, const Digraph& p2);
// An out-tree and a rooted tree.
JRIndex index_hpd_two_trees(const Digraph& t1, const Digraph& t2);

JRIndex build_index(IndexClass cls, const Digraph& g1, const Digraph& g2);

}  // namespace jr
