#include "jr/tree.hpp"

#include <algorithm>

namespace jr {

DfsIntervals dfs_intervals(const RootedTree& t) {
  DfsIntervals iv;
  iv.s.assign(t.n(), 0);
  iv.t.assign(t.n(), 0);
  if (t.n() == 0) return iv;
  Vertex clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{t.root, 0}};
  iv.s[t.root] = ++clock;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < t.children[v].size()) {
      Vertex c = t.children[v][next++];
      iv.s[c] = ++clock;
      stack.emplace_back(c, 0);
    } else {
      iv.t[v] = ++clock;
      stack.pop_back();
    }
  }
  if (clock != 2 * t.n()) throw Error("dfs_intervals: not a connected tree");
  return iv;
}

DfsIntervals dfs_intervals(const Digraph& tree) {
  return dfs_intervals(rooted_tree(tree));
}

std::vector<Vertex> preorder(const RootedTree& t) {
  std::vector<Vertex> order;
  if (t.n() == 0) return order;
  order.reserve(t.n());
  std::vector<Vertex> stack{t.root};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& ch = t.children[v];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::vector<Vertex> subtree_sizes(const RootedTree& t) {
  std::vector<Vertex> size(t.n(), 1);
  auto order = preorder(t);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (t.parent[*it] != kNoVertex) size[t.parent[*it]] += size[*it];
  }
  return size;
}

std::vector<Vertex> depths(const RootedTree& t) {
  std::vector<Vertex> depth(t.n(), 0);
  for (Vertex v : preorder(t)) {
    if (t.parent[v] != kNoVertex) depth[v] = depth[t.parent[v]] + 1;
  }
  return depth;
}

NcaIndex::NcaIndex(const RootedTree& t) {
  const Vertex n = t.n();
  first_.assign(n, kNoVertex);
  depth_ = depths(t);
  if (n == 0) return;
  tour_.reserve(2 * static_cast<std::size_t>(n));
  std::vector<std::pair<Vertex, std::size_t>> stack{{t.root, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == 0) first_[v] = static_cast<Vertex>(tour_.size());
    tour_.push_back(v);
    if (next < t.children[v].size()) {
      Vertex c = t.children[v][next++];
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
    }
  }
  const std::size_t len = tour_.size();
  log2_.assign(len + 1, 0);
  for (std::size_t i = 2; i <= len; ++i) log2_[i] = log2_[i / 2] + 1;
  sparse_.emplace_back(len);
  for (std::size_t i = 0; i < len; ++i) sparse_[0][i] = static_cast<Vertex>(i);
  for (std::size_t k = 1; (std::size_t{1} << k) <= len; ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    std::vector<Vertex> level(len - (std::size_t{1} << k) + 1);
    for (std::size_t i = 0; i < level.size(); ++i) {
      level[i] = argmin(sparse_[k - 1][i], sparse_[k - 1][i + half]);
    }
    sparse_.push_back(std::move(level));
  }
}

Vertex NcaIndex::query(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n() || b >= n()) {
    throw Error("nca query: vertex out of range");
  }
  Vertex i = first_[a];
  Vertex j = first_[b];
  if (i > j) std::swap(i, j);
  const auto k = log2_[j - i + 1];
  return tour_[argmin(sparse_[k][i], sparse_[k][j - (1 << k) + 1])];
}

NcaIndex nca_build(const RootedTree& t) { return NcaIndex(t); }

Vertex nca_query(const NcaIndex& idx, Vertex a, Vertex b) {
  return idx.query(a, b);
}

}  // namespace jr
