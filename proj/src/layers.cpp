#include "jr/layers.hpp"

#include <algorithm>

namespace jr {

Vertex LayerDecomposition::local_of(Vertex v, Vertex i) const {
  if (i == iota[v]) return local_in_own_[v];
  if (i == iota[v] - 1) return local_in_prev_[v];
  return kNoVertex;
}

Role LayerDecomposition::role(Vertex v, Vertex i) const {
  Vertex l = local_of(v, i);
  return l == kNoVertex ? Role::kAbsent : graphs[i].role[l];
}

std::vector<Vertex> LayerDecomposition::graphs_of(Vertex v) const {
  std::vector<Vertex> out;
  if (iota[v] > 0) out.push_back(iota[v] - 1);
  out.push_back(iota[v]);
  return out;
}

std::size_t LayerDecomposition::total_size() const {
  std::size_t total = 0;
  for (const auto& lg : graphs) total += lg.graph.size();
  return total;
}

LayerDecomposition layer_decompose(const Digraph& g, Vertex v0) {
  if (!g.contains(v0)) throw Error("layer_decompose: v0 out of range");
  if (!is_weakly_connected(g)) {
    throw Error("layer_decompose: graph is not weakly connected");
  }
  const bool tree = is_undirected_tree(g);
  if (!tree && !is_acyclic(g)) {
    throw Error("layer_decompose: input must be acyclic or an unoriented tree");
  }
  const Vertex n = g.n();
  LayerDecomposition d;
  d.v0 = v0;
  d.tree_input = tree;
  d.iota.assign(n, kNoVertex);

  // L0: v0 and its successors. Afterwards odd layers collect vertices that
  // reach earlier layers, even layers vertices reached from earlier layers.
  // New members of L_i always have an arc to L_{i-1} or to L_i itself, so
  // seeding from L_{i-1} suffices.
  Vertex assigned = 0;
  auto grow = [&](std::vector<Vertex> seeds, bool forward, Vertex layer,
                  std::vector<Vertex>& members) {
    std::vector<Vertex> stack = std::move(seeds);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : forward ? g.out(v) : g.in(v)) {
        if (d.iota[w] != kNoVertex) continue;
        d.iota[w] = layer;
        members.push_back(w);
        stack.push_back(w);
        ++assigned;
      }
    }
  };
  {
    std::vector<Vertex> l0{v0};
    d.iota[v0] = 0;
    ++assigned;
    grow({v0}, true, 0, l0);
    d.layers.push_back(std::move(l0));
  }
  while (assigned < n) {
    const Vertex i = d.mu();
    std::vector<Vertex> members;
    grow(d.layers.back(), i % 2 == 0, i, members);
    if (members.empty()) throw Error("layer_decompose: no progress");
    d.layers.push_back(std::move(members));
  }
  for (auto& layer : d.layers) std::sort(layer.begin(), layer.end());

  d.local_in_own_.assign(n, kNoVertex);
  d.local_in_prev_.assign(n, kNoVertex);
  std::vector<Vertex> local(n, kNoVertex);
  const Vertex mu = d.mu();
  for (Vertex i = 0; i < mu; ++i) {
    LayerGraph lg;
    lg.contracted_root = i > 0;
    lg.core_out = i % 2 == 0;
    std::vector<Vertex> core_members;
    if (i == 0) {
      lg.original.push_back(v0);
      lg.role.push_back(Role::kCore);
      for (Vertex v : d.layers[0]) {
        if (v != v0) core_members.push_back(v);
      }
    } else {
      lg.original.push_back(kNoVertex);
      lg.role.push_back(Role::kRoot);
      core_members = d.layers[i];
    }
    for (Vertex v : core_members) {
      lg.original.push_back(v);
      lg.role.push_back(Role::kCore);
    }
    if (i + 1 < mu) {
      for (Vertex v : d.layers[i + 1]) {
        lg.original.push_back(v);
        lg.role.push_back(Role::kFringe);
      }
    }
    const Vertex count = static_cast<Vertex>(lg.original.size());
    for (Vertex l = 0; l < count; ++l) {
      Vertex v = lg.original[l];
      if (v == kNoVertex) continue;
      local[v] = l;
      if (d.iota[v] == i) {
        d.local_in_own_[v] = l;
      } else {
        d.local_in_prev_[v] = l;
      }
    }
    std::vector<Arc> arcs;
    for (Vertex l = 0; l < count; ++l) {
      Vertex u = lg.original[l];
      if (u == kNoVertex) continue;
      for (Vertex w : g.out(u)) {
        Vertex layer = d.iota[w];
        if (layer == i || layer == i + 1) {
          arcs.emplace_back(l, local[w]);
        } else if (layer < i) {
          arcs.emplace_back(l, 0);
        }
      }
      for (Vertex w : g.in(u)) {
        if (d.iota[w] < i) arcs.emplace_back(0, l);
      }
    }
    lg.graph = Digraph(count, std::move(arcs));

    lg.fringe_root.assign(count, kNoVertex);
    if (tree) {
      // Multi-source search from the core over undirected local edges.
      std::vector<Vertex> stack;
      for (Vertex l = 0; l < count; ++l) {
        if (lg.role[l] != Role::kFringe) stack.push_back(l);
      }
      std::vector<Vertex> attach(count, kNoVertex);
      for (Vertex l : stack) attach[l] = l;
      while (!stack.empty()) {
        Vertex l = stack.back();
        stack.pop_back();
        for (auto nbrs : {lg.graph.out(l), lg.graph.in(l)}) {
          for (Vertex w : nbrs) {
            if (attach[w] != kNoVertex || lg.role[w] != Role::kFringe) continue;
            attach[w] = attach[l];
            lg.fringe_root[w] = attach[l];
            stack.push_back(w);
          }
        }
      }
    }
    for (Vertex l = 0; l < count; ++l) {
      if (lg.original[l] != kNoVertex) local[lg.original[l]] = kNoVertex;
    }
    d.graphs.push_back(std::move(lg));
  }
  return d;
}

LayerDecomposition layer_decompose(const Digraph& g) {
  if (g.n() == 0) throw Error("layer_decompose: empty graph");
  return layer_decompose(g, 0);
}

}  // namespace jr
