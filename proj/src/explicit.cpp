#include "jr/explicit.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <string>

#include "jr/cover.hpp"
#include "jr/graph_io.hpp"
#include "jr/minimal.hpp"
#include "jr/pieces.hpp"
#include "jr/tree.hpp"

namespace jr {

Vertex bit_reverse(Vertex x, int bits) {
  Vertex r = 0;
  for (int i = 0; i < bits; ++i) r |= ((x >> i) & 1) << (bits - 1 - i);
  return r;
}

std::pair<Digraph, Digraph> gen_bitreversal(Vertex n) {
  if (n < 1 || (n & (n - 1)) != 0) {
    throw Error("gen_bitreversal: n must be a power of two");
  }
  const int beta = std::countr_zero(static_cast<std::uint32_t>(n));
  std::vector<Arc> a1, a2;
  std::vector<Vertex> by_rank(n);
  for (Vertex v = 0; v < n; ++v) by_rank[bit_reverse(v, beta)] = v;
  for (Vertex r = 0; r + 1 < n; ++r) {
    a1.emplace_back(r, r + 1);
    a2.emplace_back(by_rank[r], by_rank[r + 1]);
  }
  return {Digraph(n, std::move(a1), Kind::kPath),
          Digraph(n, std::move(a2), Kind::kPath)};
}

namespace {

class JoinBuilder {
 public:
  explicit JoinBuilder(Vertex n) : n_(n) {}

  Vertex steiner(const SteinerTag& tag) {
    tags_.push_back(tag);
    return n_ + static_cast<Vertex>(tags_.size()) - 1;
  }
  void arc(Vertex u, Vertex v) { arcs_.emplace_back(u, v); }

  JoinGraph finish() {
    JoinGraph j;
    j.original_count = n_;
    j.graph = Digraph(n_ + static_cast<Vertex>(tags_.size()), std::move(arcs_));
    j.steiner = std::move(tags_);
    return j;
  }

 private:
  Vertex n_;
  std::vector<Arc> arcs_;
  std::vector<SteinerTag> tags_;
};

// Two-dimensional dominance: source a reaches target b iff x1(a) <= x1(b)
// and x2(a) <= x2(b).
struct Item2 {
  Vertex vertex;
  int x1;
  int x2;
  std::uint8_t flags;
};

// Sources reach every target with x2 at least their own, through a chain of
// one Steiner vertex per target in increasing x2.
void link_by_x2(std::span<const Item2> src_side, std::span<const Item2> tgt_side,
                SteinerTag tag, JoinBuilder& jb) {
  int min_src = std::numeric_limits<int>::max();
  for (const auto& it : src_side) {
    if (it.flags & kSource) min_src = std::min(min_src, it.x2);
  }
  std::vector<const Item2*> targets;
  for (const auto& it : tgt_side) {
    if ((it.flags & kTarget) && it.x2 >= min_src) targets.push_back(&it);
  }
  if (targets.empty()) return;
  std::sort(targets.begin(), targets.end(),
            [](const Item2* a, const Item2* b) { return a->x2 < b->x2; });
  std::vector<Vertex> chain(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    chain[i] = jb.steiner(tag);
    jb.arc(chain[i], targets[i]->vertex);
    if (i > 0) jb.arc(chain[i - 1], chain[i]);
  }
  for (const auto& it : src_side) {
    if (!(it.flags & kSource)) continue;
    auto pos = std::lower_bound(
        targets.begin(), targets.end(), it.x2,
        [](const Item2* t, int x2) { return t->x2 < x2; });
    if (pos != targets.end()) jb.arc(it.vertex, chain[pos - targets.begin()]);
  }
}

// Items sorted by x1.
void dc2(std::span<const Item2> items, int group, int depth, JoinBuilder& jb) {
  if (items.size() <= 1) return;
  const int lo = items.front().x1;
  const int hi = items.back().x1;
  SteinerTag tag{group, depth, 1, 1, lo, lo, hi};
  if (lo == hi) {
    link_by_x2(items, items, tag, jb);
    return;
  }
  int thr = items[items.size() / 2].x1;
  if (thr == lo) {
    thr = std::upper_bound(items.begin(), items.end(), lo,
                           [](int x, const Item2& it) { return x < it.x1; })
              ->x1;
  }
  tag.mid = thr;
  auto split = std::lower_bound(items.begin(), items.end(), thr,
                                [](const Item2& it, int x) { return it.x1 < x; });
  const std::size_t k = split - items.begin();
  link_by_x2(items.first(k), items.subspan(k), tag, jb);
  dc2(items.first(k), group, depth + 1, jb);
  dc2(items.subspan(k), group, depth + 1, jb);
}

void build_dominance(std::vector<Item2> items, int group, JoinBuilder& jb) {
  std::sort(items.begin(), items.end(),
            [](const Item2& a, const Item2& b) { return a.x1 < b.x1; });
  dc2(items, group, 0, jb);
}

// Items of a tree piece with up to two extra coordinates; a source reaches a
// target iff it is a tree ancestor (out) or descendant (in) and every y of
// the source is at least the target's.
struct ItemT {
  Vertex vertex;
  Vertex local;
  int y[2];
  std::uint8_t flags;
};

struct TreeCtx {
  const DfsIntervals* iv;
  bool out;
  int group;
  JoinBuilder* jb;
};

void wire_tree(std::vector<ItemT>& items, const TreeCtx& ctx, int depth) {
  const auto& s = ctx.iv->s;
  const auto& t = ctx.iv->t;
  std::sort(items.begin(), items.end(),
            [&](const ItemT& a, const ItemT& b) { return s[a.local] < s[b.local]; });
  SteinerTag tag{ctx.group, depth, 0, 0, s[items.front().local], 0,
                 s[items.back().local]};
  // Stack of (item, Steiner) for the hub role: sources in an out-tree,
  // targets in an in-tree.
  const std::uint8_t hub = ctx.out ? kSource : kTarget;
  std::vector<std::pair<const ItemT*, Vertex>> stack;
  for (const auto& it : items) {
    while (!stack.empty() && t[stack.back().first->local] < s[it.local]) {
      stack.pop_back();
    }
    if (it.flags & hub) {
      Vertex sv = ctx.jb->steiner(tag);
      if (ctx.out) {
        ctx.jb->arc(it.vertex, sv);
        if (!stack.empty()) ctx.jb->arc(stack.back().second, sv);
      } else {
        ctx.jb->arc(sv, it.vertex);
        if (!stack.empty()) ctx.jb->arc(sv, stack.back().second);
      }
      stack.emplace_back(&it, sv);
    }
    if ((it.flags & (kBoth ^ hub)) && !stack.empty()) {
      if (ctx.out) {
        ctx.jb->arc(stack.back().second, it.vertex);
      } else {
        ctx.jb->arc(it.vertex, stack.back().second);
      }
    }
  }
}

void tree_dc(std::vector<ItemT> items, int d, const TreeCtx& ctx, int depth) {
  bool any_src = false;
  bool any_tgt = false;
  for (const auto& it : items) {
    any_src |= (it.flags & kSource) != 0;
    any_tgt |= (it.flags & kTarget) != 0;
  }
  if (items.size() <= 1 || !any_src || !any_tgt) return;
  if (d == 0) {
    wire_tree(items, ctx, depth);
    return;
  }
  const int k = d - 1;
  std::sort(items.begin(), items.end(),
            [k](const ItemT& a, const ItemT& b) { return a.y[k] < b.y[k]; });
  const int lo = items.front().y[k];
  if (lo == items.back().y[k]) {
    tree_dc(std::move(items), d - 1, ctx, depth);
    return;
  }
  int thr = items[items.size() / 2].y[k];
  if (thr == lo) {
    thr = std::upper_bound(items.begin(), items.end(), lo,
                           [k](int y, const ItemT& it) { return y < it.y[k]; })
              ->y[k];
  }
  auto split = std::lower_bound(items.begin(), items.end(), thr,
                                [k](const ItemT& it, int y) { return it.y[k] < y; });
  std::vector<ItemT> below(items.begin(), split);
  std::vector<ItemT> above(split, items.end());
  std::vector<ItemT> cross;
  for (auto it : above) {
    if (it.flags & kSource) cross.push_back({it.vertex, it.local, {it.y[0], it.y[1]}, kSource});
  }
  for (auto it : below) {
    if (it.flags & kTarget) cross.push_back({it.vertex, it.local, {it.y[0], it.y[1]}, kTarget});
  }
  items.clear();
  items.shrink_to_fit();
  tree_dc(std::move(cross), d - 1, ctx, depth + 1);
  tree_dc(std::move(above), d, ctx, depth + 1);
  tree_dc(std::move(below), d, ctx, depth + 1);
}

// Reachability inside a rooted piece expressed as "y(source) >= y(target)"
// for every coordinate: height for a chain, (-s, t) for an out-tree and
// (s, -t) for an in-tree.
int piece_coords(const Piece& p, const DfsIntervals& iv, Vertex local, int* y) {
  if (p.chain) {
    y[0] = p.tree.n() - 1 - local;
    return 1;
  }
  if (p.tree.out) {
    y[0] = -iv.s[local];
    y[1] = iv.t[local];
  } else {
    y[0] = iv.s[local];
    y[1] = -iv.t[local];
  }
  return 2;
}

JoinGraph build_piecewise(const Digraph& g1, const Digraph& g2) {
  if (g1.n() != g2.n()) throw Error("join graph: vertex count mismatch");
  const PieceSet a = decompose_pieces(g1);
  const PieceSet b = decompose_pieces(g2);
  std::vector<DfsIntervals> iv_a, iv_b;
  for (const auto& p : a.pieces) iv_a.push_back(dfs_intervals(p.tree));
  for (const auto& p : b.pieces) iv_b.push_back(dfs_intervals(p.tree));
  JoinBuilder jb(g1.n());
  const auto pairs = pair_pieces(a, b);
  for (int g = 0; g < static_cast<int>(pairs.size()); ++g) {
    const auto& pair = pairs[g];
    const Piece& p1 = a.pieces[pair.piece1];
    const Piece& p2 = b.pieces[pair.piece2];
    if (p1.chain && p2.chain) {
      std::vector<Item2> items;
      for (const auto& it : pair.items) {
        items.push_back({it.vertex, it.local1, it.local2, it.flags});
      }
      build_dominance(std::move(items), g, jb);
      continue;
    }
    // The join relation is symmetric in the two graphs, so the tree side
    // can always be taken as the wired one.
    const bool swap = p1.chain;
    const Piece& tree = swap ? p2 : p1;
    const Piece& other = swap ? p1 : p2;
    const DfsIntervals& tree_iv = swap ? iv_b[pair.piece2] : iv_a[pair.piece1];
    const DfsIntervals& other_iv = swap ? iv_a[pair.piece1] : iv_b[pair.piece2];
    std::vector<ItemT> items;
    int d = 0;
    for (const auto& it : pair.items) {
      ItemT item{it.vertex, swap ? it.local2 : it.local1, {0, 0}, it.flags};
      d = piece_coords(other, other_iv, swap ? it.local1 : it.local2, item.y);
      items.push_back(item);
    }
    tree_dc(std::move(items), d, TreeCtx{&tree_iv, tree.tree.out, g, &jb}, 0);
  }
  return jb.finish();
}

bool is_rooted_tree(const Digraph& g) {
  if (!is_undirected_tree(g)) return false;
  bool out_ok = true;
  bool in_ok = true;
  for (Vertex v = 0; v < g.n(); ++v) {
    out_ok &= g.in_degree(v) <= 1;
    in_ok &= g.out_degree(v) <= 1;
  }
  return out_ok || in_ok;
}

bool is_dipath(const Digraph& g) {
  if (!is_undirected_path(g)) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.in_degree(v) > 1 || g.out_degree(v) > 1) return false;
  }
  return true;
}

}  // namespace

JoinGraph build_two_paths(const Digraph& p1, const Digraph& p2) {
  if (!is_undirected_path(p1) || !is_undirected_path(p2)) {
    throw Error("build_two_paths: both inputs must be paths");
  }
  return build_piecewise(p1, p2);
}

JoinGraph build_tree_path(const Digraph& t1, const Digraph& p2) {
  const bool ok = (is_undirected_tree(t1) && is_undirected_path(p2)) ||
                  (is_undirected_path(t1) && is_undirected_tree(p2));
  if (!ok) throw Error("build_tree_path: expected a tree and a path");
  return build_piecewise(t1, p2);
}

JoinGraph build_two_trees(const Digraph& t1, const Digraph& t2) {
  if (!is_rooted_tree(t1) || !is_rooted_tree(t2)) {
    throw Error("build_two_trees: both inputs must be rooted trees");
  }
  return build_piecewise(t1, t2);
}

JoinGraph build_unoriented_trees(const Digraph& g1, const Digraph& g2) {
  if (!is_undirected_tree(g1) || !is_undirected_tree(g2)) {
    throw Error("build_unoriented_trees: both inputs must be trees");
  }
  return build_piecewise(g1, g2);
}

JoinGraph build_pathcover(const Digraph& g1, const Digraph& g2) {
  if (g1.n() != g2.n()) throw Error("build_pathcover: vertex count mismatch");
  if (!is_acyclic(g1)) throw Error("build_pathcover: first graph has a cycle");
  const Vertex n = g1.n();
  const PathCover c1 = min_path_cover(g1);
  const FromRanks f1 = from_ranks(g1, c1);
  // Second graph as a cover too: a dipath is its own single path, whose
  // from-rank is simply the rank.
  PathCover c2;
  FromRanks f2;
  if (is_dipath(g2) && n > 0) {
    c2 = cover_from_paths(n, {dipath_order(g2)});
    f2.n = n;
    f2.kappa = 1;
    f2.from = c2.rank;
  } else {
    if (!is_acyclic(g2)) throw Error("build_pathcover: second graph has a cycle");
    c2 = min_path_cover(g2);
    f2 = from_ranks(g2, c2);
  }
  JoinBuilder jb(n);
  for (Vertex i = 0; i < c1.kappa(); ++i) {
    std::vector<std::vector<Item2>> by_j(c2.kappa());
    for (Vertex z : c1.paths[i]) {
      by_j[c2.path_of[z]].push_back({z, c1.rank[z], c2.rank[z], kSource});
    }
    for (Vertex j = 0; j < c2.kappa(); ++j) {
      auto& items = by_j[j];
      if (items.empty()) continue;
      for (Vertex v = 0; v < n; ++v) {
        const Vertex r1 = f1.at(v, i);
        const Vertex r2 = f2.at(v, j);
        if (r1 != kNoVertex && r2 != kNoVertex) items.push_back({v, r1, r2, kTarget});
      }
      build_dominance(std::move(items), i * c2.kappa() + j, jb);
    }
  }
  return jb.finish();
}

VerifyReport verify_join_graph(const JoinGraph& j, const ReachMatrix& expected) {
  if (j.original_count != expected.n()) {
    throw Error("verify: join graph has " + std::to_string(j.original_count) +
                " original vertices, inputs have " + std::to_string(expected.n()));
  }
  const ReachMatrix got = closure_on_prefix(j.graph, j.original_count);
  VerifyReport r;
  for (Vertex a = 0; a < got.n() && r.ok; ++a) {
    auto ga = got.row(a);
    auto ea = expected.row(a);
    for (std::size_t w = 0; w < ga.size(); ++w) {
      if (ga[w] == ea[w]) continue;
      const Vertex b = static_cast<Vertex>(w * 64 + std::countr_zero(ga[w] ^ ea[w]));
      r = {false, a, b, got.reach(a, b), expected.reach(a, b)};
      break;
    }
  }
  return r;
}

VerifyReport verify_join_graph(const JoinGraph& j, const Digraph& g1,
                               const Digraph& g2) {
  if (g1.n() != g2.n()) throw Error("verify: input vertex counts differ");
  return verify_join_graph(
      j, and_closure(transitive_closure(g1), transitive_closure(g2)));
}

JoinGraph expand_condensed(const JoinGraph& hat, const CondensedPair& cp) {
  const Vertex h = cp.subcomponent_count();
  if (hat.original_count != h) throw Error("expand_condensed: size mismatch");
  const Vertex n = static_cast<Vertex>(cp.sub_of.size());
  auto map = [&](Vertex v) { return v < h ? cp.members[v].front() : v - h + n; };
  std::vector<Arc> arcs;
  for (const auto& [u, v] : hat.graph.arcs()) arcs.emplace_back(map(u), map(v));
  for (const auto& members : cp.members) {
    if (members.size() < 2) continue;
    for (std::size_t i = 0; i < members.size(); ++i) {
      arcs.emplace_back(members[i], members[(i + 1) % members.size()]);
    }
  }
  JoinGraph j;
  j.original_count = n;
  j.graph = Digraph(n + hat.steiner_count(), std::move(arcs));
  j.steiner = hat.steiner;
  return j;
}

void write_join_graph(std::ostream& out, const JoinGraph& j) {
  write_graph(out, j.graph);
  out << "steiner " << j.steiner_count() << '\n';
  for (const auto& t : j.steiner) {
    out << t.group << ' ' << t.depth << ' ' << t.dim << ' ' << t.side << ' '
        << t.lo << ' ' << t.mid << ' ' << t.hi << '\n';
  }
}

JoinGraph read_join_graph(std::istream& in) {
  JoinGraph j;
  j.graph = read_graph(in);
  std::string word;
  long long k = -1;
  if (!(in >> word >> k) || word != "steiner" || k < 0 || k > j.graph.n()) {
    throw Error("join graph file: missing or malformed 'steiner k' section");
  }
  j.original_count = j.graph.n() - static_cast<Vertex>(k);
  j.steiner.resize(static_cast<std::size_t>(k));
  for (auto& t : j.steiner) {
    if (!(in >> t.group >> t.depth >> t.dim >> t.side >> t.lo >> t.mid >> t.hi)) {
      throw Error("join graph file: truncated Steiner tags");
    }
  }
  return j;
}

void save_join_graph(const std::filesystem::path& path, const JoinGraph& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_join_graph(out, j);
}

JoinGraph load_join_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_join_graph(in);
}

}  // namespace jr
