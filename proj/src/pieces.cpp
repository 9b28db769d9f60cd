#include "jr/pieces.hpp"

#include <algorithm>
#include <map>

#include "jr/layers.hpp"

namespace jr {

std::vector<std::vector<Vertex>> split_unoriented_path(const Digraph& p) {
  if (!is_undirected_path(p)) throw Error("split_unoriented_path: not a path");
  std::vector<std::vector<Vertex>> out;
  const Vertex n = p.n();
  if (n == 0) return out;
  if (n == 1) return {{0}};
  Vertex start = kNoVertex;
  for (Vertex v = 0; v < n && start == kNoVertex; ++v) {
    if (p.in_degree(v) + p.out_degree(v) == 1) start = v;
  }
  // Walk the undirected path, recording each step's orientation.
  std::vector<Vertex> walk{start};
  std::vector<bool> forward;
  for (Vertex prev = kNoVertex, v = start;;) {
    Vertex next = kNoVertex;
    bool fwd = true;
    for (Vertex w : p.out(v)) {
      if (w != prev) next = w;
    }
    for (Vertex w : p.in(v)) {
      if (w != prev) {
        next = w;
        fwd = false;
      }
    }
    if (next == kNoVertex) break;
    walk.push_back(next);
    forward.push_back(fwd);
    prev = v;
    v = next;
  }
  std::size_t i = 0;
  while (i < forward.size()) {
    std::size_t j = i;
    while (j + 1 < forward.size() && forward[j + 1] == forward[i]) ++j;
    std::vector<Vertex> sub(walk.begin() + i, walk.begin() + j + 2);
    if (!forward[i]) std::reverse(sub.begin(), sub.end());
    out.push_back(std::move(sub));
    i = j + 1;
  }
  return out;
}

Vertex lowest_source(const Digraph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.in_degree(v) == 0) return v;
  }
  throw Error("graph has no source vertex");
}

namespace {

Piece chain_piece(const std::vector<Vertex>& order) {
  Piece piece;
  piece.chain = true;
  const Vertex len = static_cast<Vertex>(order.size());
  std::vector<Vertex> parent(len);
  for (Vertex i = 0; i < len; ++i) parent[i] = i - 1;
  parent[0] = kNoVertex;
  piece.tree = rooted_tree_from_parents(std::move(parent), true);
  piece.original = order;
  piece.flags.assign(len, kBoth);
  return piece;
}

// Folds the fringe trees of a 2-layered tree into its core: every fringe
// vertex becomes an extra ancestor of the core vertex its fringe tree hangs
// from. A fringe vertex of an out-core graph then precedes exactly the core
// subtree it reaches; one of an in-core graph follows exactly the core
// subtree reaching it.
Piece layer_piece(const LayerGraph& lg, Vertex layer) {
  Piece piece;
  piece.layer = layer;
  const Vertex count = lg.local_count();
  std::vector<Vertex> parent(count, kNoVertex);
  std::vector<char> seen(count, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (auto nbrs : {lg.graph.out(v), lg.graph.in(v)}) {
      for (Vertex w : nbrs) {
        if (seen[w] || lg.role[w] == Role::kFringe) continue;
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::vector<Vertex>> hanging(count);
  for (Vertex l = 0; l < count; ++l) {
    if (lg.role[l] == Role::kFringe) hanging[lg.fringe_root[l]].push_back(l);
  }
  for (Vertex c = 0; c < count; ++c) {
    for (Vertex f : hanging[c]) {
      parent[f] = parent[c];
      parent[c] = f;
    }
  }
  piece.tree = rooted_tree_from_parents(std::move(parent), lg.core_out);
  piece.original = lg.original;
  piece.flags.resize(count);
  for (Vertex l = 0; l < count; ++l) {
    switch (lg.role[l]) {
      case Role::kCore:
        piece.flags[l] = kBoth;
        break;
      case Role::kFringe:
        piece.flags[l] = lg.core_out ? kSource : kTarget;
        break;
      default:
        piece.flags[l] = 0;
    }
  }
  return piece;
}

}  // namespace

PieceSet decompose_pieces(const Digraph& g) {
  PieceSet set;
  const Vertex n = g.n();
  set.member_of.assign(n, {});
  if (n == 0) return set;
  if (!is_undirected_tree(g)) throw Error("expected a path- or tree-shaped graph");
  bool out_ok = true;
  bool in_ok = true;
  for (Vertex v = 0; v < n; ++v) {
    if (g.in_degree(v) > 1) out_ok = false;
    if (g.out_degree(v) > 1) in_ok = false;
  }
  const bool path = is_undirected_path(g);
  if (path && out_ok && in_ok) {
    set.pieces.push_back(chain_piece(dipath_order(g)));
  } else if (path) {
    for (const auto& sub : split_unoriented_path(g)) {
      set.pieces.push_back(chain_piece(sub));
    }
  } else if (out_ok || in_ok) {
    Piece piece;
    piece.tree = rooted_tree(g);
    piece.original.resize(n);
    for (Vertex v = 0; v < n; ++v) piece.original[v] = v;
    piece.flags.assign(n, kBoth);
    set.pieces.push_back(std::move(piece));
  } else {
    set.layered = true;
    auto d = layer_decompose(g, lowest_source(g));
    for (Vertex i = 0; i < d.mu(); ++i) {
      set.pieces.push_back(layer_piece(d.graphs[i], i));
    }
  }
  for (Vertex p = 0; p < static_cast<Vertex>(set.pieces.size()); ++p) {
    const auto& orig = set.pieces[p].original;
    for (Vertex l = 0; l < static_cast<Vertex>(orig.size()); ++l) {
      if (orig[l] != kNoVertex) set.member_of[orig[l]].emplace_back(p, l);
    }
  }
  return set;
}

std::vector<PiecePair> pair_pieces(const PieceSet& a, const PieceSet& b) {
  if (a.member_of.size() != b.member_of.size()) {
    throw Error("pair_pieces: vertex count mismatch");
  }
  std::map<std::pair<Vertex, Vertex>, std::size_t> index;
  std::vector<PiecePair> pairs;
  for (Vertex v = 0; v < static_cast<Vertex>(a.member_of.size()); ++v) {
    for (auto [p1, l1] : a.member_of[v]) {
      for (auto [p2, l2] : b.member_of[v]) {
        const std::uint8_t f = a.pieces[p1].flags[l1] & b.pieces[p2].flags[l2];
        if (f == 0) continue;
        auto [it, fresh] = index.try_emplace({p1, p2}, pairs.size());
        if (fresh) pairs.push_back({p1, p2, {}});
        pairs[it->second].items.push_back({v, l1, l2, f});
      }
    }
  }
  return pairs;
}

}  // namespace jr
