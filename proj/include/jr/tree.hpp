#pragma once

#include <cstdint>
#include <vector>

#include "jr/graph.hpp"

namespace jr {

// Depth-first search intervals I(a) = [s(a), t(a)]. A single counter is
// incremented on every entry and every exit, so all 2n values are distinct
// and lie in [1, 2n]. Children are visited in increasing id order.
struct DfsIntervals {
  std::vector<Vertex> s;
  std::vector<Vertex> t;

  bool is_ancestor(Vertex a, Vertex b) const {  // inclusive
    return s[a] <= s[b] && t[b] <= t[a];
  }
};

DfsIntervals dfs_intervals(const RootedTree& t);
DfsIntervals dfs_intervals(const Digraph& tree);

// Nearest common ancestors via an Euler tour and a sparse-table RMQ over
// depths: O(n log n) space, O(1) query.
class NcaIndex {
 public:
  NcaIndex() = default;
  explicit NcaIndex(const RootedTree& t);

  Vertex query(Vertex a, Vertex b) const;
  Vertex depth(Vertex v) const { return depth_[v]; }
  Vertex n() const { return static_cast<Vertex>(first_.size()); }

 private:
  Vertex argmin(Vertex i, Vertex j) const {
    return depth_[tour_[i]] <= depth_[tour_[j]] ? i : j;
  }

  std::vector<Vertex> tour_;
  std::vector<Vertex> first_;
  std::vector<Vertex> depth_;
  std::vector<std::vector<Vertex>> sparse_;  // indices into tour_
  std::vector<std::uint8_t> log2_;
};

NcaIndex nca_build(const RootedTree& t);
Vertex nca_query(const NcaIndex& idx, Vertex a, Vertex b);

// Preorder of a rooted tree (children by increasing id).
std::vector<Vertex> preorder(const RootedTree& t);
std::vector<Vertex> subtree_sizes(const RootedTree& t);
std::vector<Vertex> depths(const RootedTree& t);

}  // namespace jr
