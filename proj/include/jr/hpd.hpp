#pragma once

#include <vector>

#include "jr/geom.hpp"
#include "jr/graph.hpp"
#include "jr/tree.hpp"

namespace jr {

// A child c of a is heavy iff 2|T(c)| >= |T(a)|; at most one child can be.
struct HeavyPathDecomp {
  std::vector<Vertex> heavy;              // heavy child or kNoVertex
  std::vector<Vertex> path_of;
  std::vector<Vertex> pos;                // 0 at the top of the path
  std::vector<std::vector<Vertex>> paths; // top first
  std::vector<Vertex> top_parent;         // per path; kNoVertex for the root path
  // Light vertices on the root path of v, v included and the root excluded.
  std::vector<Vertex> light_level;

  Vertex path_height(Vertex v) const {
    return static_cast<Vertex>(paths[path_of[v]].size()) - 1 - pos[v];
  }
};

HeavyPathDecomp hpd_build(const RootedTree& t);

// Vertices a in the subtree of b with label(a) > j.
class InTreeLabelIndex {
 public:
  InTreeLabelIndex(const RootedTree& t, std::vector<int> label);

  std::vector<Vertex> report(Vertex b, int j, QueryStats* stats = nullptr) const;

  int subtree_max(Vertex v) const { return h_[v]; }
  int light_max(Vertex v) const { return h_light_[v]; }

 private:
  RootedTree t_;
  HeavyPathDecomp hpd_;
  std::vector<int> label_;
  std::vector<int> h_;        // max label in T(v)
  std::vector<int> h_light_;  // max label in T(v) minus T(heavy child)
  std::vector<std::vector<Vertex>> light_;  // light children by decreasing h
  std::vector<CartesianTree> per_path_;     // (pos, -h_light)
};

// Ancestors a of b (b included) with label(a) > j.
class OutTreeLabelIndex {
 public:
  OutTreeLabelIndex(const RootedTree& t, std::vector<int> label);

  std::vector<Vertex> report(Vertex b, int j, QueryStats* stats = nullptr) const;

 private:
  HeavyPathDecomp hpd_;
  std::vector<CartesianTree> per_path_;  // (pos, -label)
};

// Join reachability for an out-tree and a rooted tree by walking the heavy
// paths of the out-tree. If only the second tree is an out-tree the roles
// are swapped; two in-trees are rejected.
class HpdTwoTreesIndex {
 public:
  HpdTwoTreesIndex(const Digraph& g1, const Digraph& g2);

  // Sorted, b included.
  std::vector<Vertex> report(Vertex b, QueryStats* stats = nullptr) const;
  Vertex n() const { return static_cast<Vertex>(hpd_.pos.size()); }

 private:
  HeavyPathDecomp hpd_;
  bool second_out_ = true;
  DfsIntervals iv2_;
  std::vector<CartesianTree> grounded_;  // second tree an in-tree
  std::vector<SegRayIndex> rays_;        // second tree an out-tree
  // Registration ids of b's queries, one per heavy path on its root path.
  std::vector<std::vector<std::size_t>> query_id_;
};

}  // namespace jr
