#include "jr/jr_index.hpp"

#include <algorithm>
#include <string>

#include "jr/closure.hpp"
#include "jr/cover.hpp"
#include "jr/hpd.hpp"
#include "jr/pieces.hpp"
#include "jr/tree.hpp"

namespace jr {

std::string_view index_class_name(IndexClass cls) {
  switch (cls) {
    case IndexClass::kTwoPaths:
      return "two-paths";
    case IndexClass::kTreePath:
      return "tree-path";
    case IndexClass::kTwoTrees:
      return "two-trees";
    case IndexClass::kPathcover:
      return "pathcover";
    case IndexClass::kPlanarSt:
      return "planar-st";
    case IndexClass::kHpdTwoTrees:
      return "hpd-two-trees";
  }
  return "two-paths";
}

IndexClass parse_index_class(std::string_view name) {
  for (IndexClass c : {IndexClass::kTwoPaths, IndexClass::kTreePath,
                       IndexClass::kTwoTrees, IndexClass::kPathcover,
                       IndexClass::kPlanarSt, IndexClass::kHpdTwoTrees}) {
    if (index_class_name(c) == name) return c;
  }
  throw Error("unknown class '" + std::string(name) + "'");
}

struct JRIndex::Impl {
  IndexClass cls = IndexClass::kTwoPaths;
  Vertex n = 0;

  virtual ~Impl() = default;
  // Appends predecessors of b; duplicates and b itself are allowed.
  virtual void collect(Vertex b, std::vector<Vertex>& out, QueryStats* stats) const = 0;
  virtual std::size_t structures() const { return 0; }
  virtual std::pair<Vertex, Vertex> describe(Vertex id) const { return {id, kNoVertex}; }
};

JRIndex make_index(std::shared_ptr<const JRIndex::Impl> impl) {
  return JRIndex(std::move(impl));
}

IndexClass JRIndex::variant() const {
  if (!impl_) throw Error("empty index");
  return impl_->cls;
}

Vertex JRIndex::n() const { return impl_ ? impl_->n : 0; }

std::vector<Vertex> JRIndex::query(Vertex b, QueryStats* stats) const {
  if (!impl_) throw Error("empty index");
  if (b < 0 || b >= impl_->n) {
    throw Error("query vertex " + std::to_string(b) + " out of range [0, " +
                std::to_string(impl_->n) + ")");
  }
  std::vector<Vertex> out{b};
  impl_->collect(b, out, stats);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t JRIndex::structure_count() const { return impl_ ? impl_->structures() : 0; }

std::pair<Vertex, Vertex> JRIndex::describe_structure(Vertex id) const {
  if (!impl_ || id < 0 || static_cast<std::size_t>(id) >= impl_->structures()) {
    throw Error("structure id out of range");
  }
  return impl_->describe(id);
}

namespace {

void log_probe(QueryStats* stats, Vertex id) {
  if (!stats) return;
  ++stats->probes;
  stats->probed.push_back(id);
}

// ---------------------------------------------------------------------------
// Piece pairs: paths, rooted trees and layered unoriented trees.

enum class Shape {
  kDominance,    // chain x chain
  kRayHeight,    // out-tree x chain
  kGrounded,     // in-tree x chain
  kEnclosure,    // out-tree x out-tree
  kRayInterval,  // out-tree x in-tree
  kRange,        // in-tree x in-tree
};

struct PairStructure {
  Shape shape;
  Vertex piece1;
  Vertex piece2;
  CartesianTree ct;
  SegRayIndex rays;
  EnclosureIndex rects;
  RangeTree2D range;
};

struct Probe {
  Vertex structure;
  int q[4];
  std::size_t reg;
};

struct PairIndex final : JRIndex::Impl {
  std::vector<PairStructure> parts;
  std::vector<std::vector<Probe>> probes;

  void collect(Vertex b, std::vector<Vertex>& out, QueryStats* stats) const override {
    for (const auto& pr : probes[b]) {
      const auto& s = parts[pr.structure];
      log_probe(stats, pr.structure);
      switch (s.shape) {
        case Shape::kDominance:
          s.ct.report(kCoordMin, pr.q[0], pr.q[1], out, stats);
          break;
        case Shape::kGrounded:
          s.ct.report(pr.q[0], pr.q[1], pr.q[2], out, stats);
          break;
        case Shape::kRayHeight:
          s.rays.report(pr.reg, out, stats);
          break;
        case Shape::kRayInterval:
          s.rays.report(pr.reg, out, stats, pr.q[0]);
          break;
        case Shape::kEnclosure:
          s.rects.report(Point2{pr.q[0], pr.q[1], b}, out, stats);
          break;
        case Shape::kRange:
          s.range.report(pr.q[0], pr.q[1], pr.q[2], pr.q[3], out, stats);
          break;
      }
    }
  }

  std::size_t structures() const override { return parts.size(); }
  std::pair<Vertex, Vertex> describe(Vertex id) const override {
    return {parts[id].piece1, parts[id].piece2};
  }
};

std::shared_ptr<const JRIndex::Impl> build_pair_index(IndexClass cls, const Digraph& g1,
                                                      const Digraph& g2) {
  if (g1.n() != g2.n()) throw Error("index: vertex count mismatch");
  const PieceSet a = decompose_pieces(g1);
  const PieceSet b = decompose_pieces(g2);
  std::vector<DfsIntervals> iv_a, iv_b;
  for (const auto& p : a.pieces) iv_a.push_back(dfs_intervals(p.tree));
  for (const auto& p : b.pieces) iv_b.push_back(dfs_intervals(p.tree));
  auto idx = std::make_shared<PairIndex>();
  idx->cls = cls;
  idx->n = g1.n();
  idx->probes.resize(g1.n());

  for (const auto& pair : pair_pieces(a, b)) {
    // Orient the pair so that A is a tree whenever either side is, and A is
    // an out-tree whenever either tree is.
    const Piece* pa = &a.pieces[pair.piece1];
    const Piece* pb = &b.pieces[pair.piece2];
    const DfsIntervals* ia = &iv_a[pair.piece1];
    const DfsIntervals* ib = &iv_b[pair.piece2];
    bool swapped = (pa->chain && !pb->chain) ||
                   (!pa->chain && !pb->chain && !pa->tree.out && pb->tree.out);
    if (swapped) {
      std::swap(pa, pb);
      std::swap(ia, ib);
    }
    auto la = [&](const PairItem& it) { return swapped ? it.local2 : it.local1; };
    auto lb = [&](const PairItem& it) { return swapped ? it.local1 : it.local2; };

    PairStructure s;
    s.piece1 = pair.piece1;
    s.piece2 = pair.piece2;
    if (pa->chain) {
      s.shape = Shape::kDominance;
    } else if (pb->chain) {
      s.shape = pa->tree.out ? Shape::kRayHeight : Shape::kGrounded;
    } else if (pa->tree.out) {
      s.shape = pb->tree.out ? Shape::kEnclosure : Shape::kRayInterval;
    } else {
      s.shape = Shape::kRange;
    }
    const int len_b = pb->tree.n();
    std::vector<Point2> pts;
    std::vector<HSegment> segs;
    std::vector<Rect> rects;
    std::vector<Point2> ray_queries;
    for (const auto& it : pair.items) {
      if (!(it.flags & kSource)) continue;
      const Vertex x = la(it);
      const Vertex y = lb(it);
      switch (s.shape) {
        case Shape::kDominance:
          pts.push_back({x, y, it.vertex});
          break;
        case Shape::kGrounded:
          pts.push_back({ia->s[x], y, it.vertex});
          break;
        case Shape::kRayHeight:
          segs.push_back({ia->s[x], ia->t[x], len_b - 1 - y, it.vertex});
          break;
        case Shape::kRayInterval:
          segs.push_back({ia->s[x], ia->t[x], ib->s[y], it.vertex});
          break;
        case Shape::kEnclosure:
          rects.push_back({ia->s[x], ia->t[x], ib->s[y], ib->t[y], it.vertex});
          break;
        case Shape::kRange:
          pts.push_back({ia->s[x], ib->s[y], it.vertex});
          break;
      }
    }
    if (pts.empty() && segs.empty() && rects.empty()) continue;
    const Vertex id = static_cast<Vertex>(idx->parts.size());
    for (const auto& it : pair.items) {
      if (!(it.flags & kTarget)) continue;
      const Vertex x = la(it);
      const Vertex y = lb(it);
      Probe pr{id, {0, 0, 0, 0}, 0};
      switch (s.shape) {
        case Shape::kDominance:
          pr.q[0] = x;
          pr.q[1] = y;
          break;
        case Shape::kGrounded:
          pr.q[0] = ia->s[x];
          pr.q[1] = ia->t[x];
          pr.q[2] = y;
          break;
        case Shape::kRayHeight:
          pr.reg = ray_queries.size();
          ray_queries.push_back({ia->s[x], len_b - 1 - y, it.vertex});
          break;
        case Shape::kRayInterval:
          pr.reg = ray_queries.size();
          pr.q[0] = ib->t[y];
          ray_queries.push_back({ia->s[x], ib->s[y], it.vertex});
          break;
        case Shape::kEnclosure:
          pr.q[0] = ia->s[x];
          pr.q[1] = ib->s[y];
          break;
        case Shape::kRange:
          pr.q[0] = ia->s[x];
          pr.q[1] = ia->t[x];
          pr.q[2] = ib->s[y];
          pr.q[3] = ib->t[y];
          break;
      }
      idx->probes[it.vertex].push_back(pr);
    }
    switch (s.shape) {
      case Shape::kDominance:
      case Shape::kGrounded:
        s.ct = CartesianTree(std::move(pts));
        break;
      case Shape::kRange:
        s.range = RangeTree2D(std::move(pts));
        break;
      case Shape::kRayHeight:
      case Shape::kRayInterval:
        s.rays = SegRayIndex(segs, ray_queries);
        break;
      case Shape::kEnclosure:
        s.rects = EnclosureIndex(std::move(rects));
        break;
    }
    idx->parts.push_back(std::move(s));
  }
  return idx;
}

bool rooted_shape(const Digraph& g, bool& out_ok, bool& in_ok) {
  out_ok = in_ok = true;
  for (Vertex v = 0; v < g.n(); ++v) {
    out_ok &= g.in_degree(v) <= 1;
    in_ok &= g.out_degree(v) <= 1;
  }
  return is_undirected_tree(g) && (out_ok || in_ok);
}

bool is_dipath(const Digraph& g) {
  bool out_ok, in_ok;
  return is_undirected_path(g) && rooted_shape(g, out_ok, in_ok) && out_ok && in_ok;
}

// ---------------------------------------------------------------------------
// Dipath covers. One structure per first-graph cover path (or per pair of
// cover paths when the second graph is a general DAG); every vertex keeps
// the list I(v) of structures whose answer for it is nonempty.

enum class CoverShape { kDipath, kOutTree, kInTree, kDag };

struct CoverStructure {
  Vertex path1;
  Vertex path2;
  CartesianTree ct;
  SegRayIndex rays;
};

struct CoverProbe {
  Vertex structure;
  int q[3];
  std::size_t reg;
};

struct CoverIndex final : JRIndex::Impl {
  CoverShape shape = CoverShape::kDipath;
  std::vector<CoverStructure> parts;
  std::vector<std::vector<CoverProbe>> probes;  // I(v)

  void run(const CoverProbe& pr, std::vector<Vertex>& out, QueryStats* stats) const {
    const auto& s = parts[pr.structure];
    switch (shape) {
      case CoverShape::kDipath:
      case CoverShape::kDag:
        s.ct.report(kCoordMin, pr.q[0], pr.q[1], out, stats);
        break;
      case CoverShape::kInTree:
        s.ct.report(pr.q[0], pr.q[1], pr.q[2], out, stats);
        break;
      case CoverShape::kOutTree:
        s.rays.report(pr.reg, out, stats);
        break;
    }
  }

  void collect(Vertex b, std::vector<Vertex>& out, QueryStats* stats) const override {
    for (const auto& pr : probes[b]) {
      log_probe(stats, pr.structure);
      run(pr, out, stats);
    }
  }

  std::size_t structures() const override { return parts.size(); }
  std::pair<Vertex, Vertex> describe(Vertex id) const override {
    return {parts[id].path1, parts[id].path2};
  }
};

std::shared_ptr<const JRIndex::Impl> build_cover_index(const Digraph& g1,
                                                       const Digraph& g2) {
  if (g1.n() != g2.n()) throw Error("index_pathcover: vertex count mismatch");
  if (!is_acyclic(g1)) throw Error("index_pathcover: first graph has a cycle");
  const Vertex n = g1.n();
  auto idx = std::make_shared<CoverIndex>();
  idx->cls = IndexClass::kPathcover;
  idx->n = n;
  idx->probes.resize(n);
  const PathCover c1 = min_path_cover(g1);
  const FromRanks f1 = from_ranks(g1, c1);

  bool out_ok, in_ok;
  if (n > 0 && is_dipath(g2)) {
    idx->shape = CoverShape::kDipath;
  } else if (n > 0 && rooted_shape(g2, out_ok, in_ok)) {
    idx->shape = out_ok ? CoverShape::kOutTree : CoverShape::kInTree;
  } else {
    if (!is_acyclic(g2)) throw Error("index_pathcover: second graph has a cycle");
    idx->shape = CoverShape::kDag;
  }

  std::vector<CoverProbe> candidates;
  auto keep_nonempty = [&](Vertex v) {
    std::vector<Vertex> tmp;
    for (const auto& pr : candidates) {
      tmp.clear();
      idx->run(pr, tmp, nullptr);
      if (!tmp.empty()) idx->probes[v].push_back(pr);
    }
    candidates.clear();
  };

  if (idx->shape == CoverShape::kDipath) {
    const auto r2 = dipath_ranks(g2);
    for (Vertex i = 0; i < c1.kappa(); ++i) {
      std::vector<Point2> pts;
      for (Vertex z : c1.paths[i]) pts.push_back({c1.rank[z], r2[z], z});
      idx->parts.push_back({i, 0, CartesianTree(std::move(pts)), {}});
    }
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex i = 0; i < c1.kappa(); ++i) {
        if (f1.at(v, i) != kNoVertex) candidates.push_back({i, {f1.at(v, i), r2[v], 0}, 0});
      }
      keep_nonempty(v);
    }
  } else if (idx->shape == CoverShape::kDag) {
    const PathCover c2 = min_path_cover(g2);
    const FromRanks f2 = from_ranks(g2, c2);
    std::vector<Vertex> id(static_cast<std::size_t>(c1.kappa()) * c2.kappa(), kNoVertex);
    std::vector<std::vector<Point2>> pts(id.size());
    for (Vertex z = 0; z < n; ++z) {
      pts[c1.path_of[z] * c2.kappa() + c2.path_of[z]].push_back({c1.rank[z], c2.rank[z], z});
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (pts[k].empty()) continue;
      id[k] = static_cast<Vertex>(idx->parts.size());
      idx->parts.push_back({static_cast<Vertex>(k / c2.kappa()),
                            static_cast<Vertex>(k % c2.kappa()),
                            CartesianTree(std::move(pts[k])), {}});
    }
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex i = 0; i < c1.kappa(); ++i) {
        if (f1.at(v, i) == kNoVertex) continue;
        for (Vertex j = 0; j < c2.kappa(); ++j) {
          const Vertex s = id[i * c2.kappa() + j];
          if (s != kNoVertex && f2.at(v, j) != kNoVertex) {
            candidates.push_back({s, {f1.at(v, i), f2.at(v, j), 0}, 0});
          }
        }
      }
      keep_nonempty(v);
    }
  } else {
    const RootedTree t2 = rooted_tree(g2);
    const DfsIntervals iv = dfs_intervals(t2);
    const bool out = idx->shape == CoverShape::kOutTree;
    std::vector<std::vector<Point2>> queries(c1.kappa());
    std::vector<std::vector<std::size_t>> reg(n);
    if (out) {
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex i = 0; i < c1.kappa(); ++i) {
          if (f1.at(v, i) == kNoVertex) continue;
          reg[v].push_back(queries[i].size());
          queries[i].push_back({iv.s[v], -f1.at(v, i), v});
        }
      }
    }
    for (Vertex i = 0; i < c1.kappa(); ++i) {
      CoverStructure s{i, 0, {}, {}};
      if (out) {
        // Proper ancestors a of b in the tree with rank(a) <= from.
        std::vector<HSegment> segs;
        for (Vertex z : c1.paths[i]) segs.push_back({iv.s[z], iv.t[z], -c1.rank[z], z});
        s.rays = SegRayIndex(segs, queries[i]);
      } else {
        std::vector<Point2> pts;
        for (Vertex z : c1.paths[i]) pts.push_back({iv.s[z], c1.rank[z], z});
        s.ct = CartesianTree(std::move(pts));
      }
      idx->parts.push_back(std::move(s));
    }
    for (Vertex v = 0; v < n; ++v) {
      std::size_t k = 0;
      for (Vertex i = 0; i < c1.kappa(); ++i) {
        const Vertex from = f1.at(v, i);
        if (from == kNoVertex) continue;
        if (out) {
          candidates.push_back({i, {0, 0, 0}, reg[v][k++]});
        } else {
          candidates.push_back({i, {iv.s[v], iv.t[v], from}, 0});
        }
      }
      keep_nonempty(v);
    }
  }
  return idx;
}

// ---------------------------------------------------------------------------
// Planar st-graph against a dipath: three-sided dominance on (l1, l2, rank).
// A segment tree over l1 holds, per node, a Cartesian tree on (l2, rank).

struct PlanarIndex final : JRIndex::Impl {
  KamedaLabels labels;
  std::vector<Vertex> rank;
  Vertex leaves = 1;
  std::vector<CartesianTree> node_ct;  // heap-numbered, root 1

  void collect(Vertex b, std::vector<Vertex>& out, QueryStats* stats) const override {
    // Canonical nodes of the l1 prefix [0, l1(b) - 1].
    const Point2 q{labels.l2[b], rank[b], b};
    Vertex lo = leaves;
    Vertex hi = leaves + labels.l1[b];  // exclusive
    while (lo < hi) {
      if (lo & 1) {
        log_probe(stats, lo);
        node_ct[lo].report(kCoordMin, q.x1, q.x2, out, stats);
        ++lo;
      }
      if (hi & 1) {
        --hi;
        log_probe(stats, hi);
        node_ct[hi].report(kCoordMin, q.x1, q.x2, out, stats);
      }
      lo >>= 1;
      hi >>= 1;
    }
  }

  std::size_t structures() const override { return node_ct.size(); }
};

std::shared_ptr<const JRIndex::Impl> build_planar_index(const Digraph& g1,
                                                        const Digraph& p2) {
  if (g1.n() != p2.n()) throw Error("index_planar_st: vertex count mismatch");
  if (g1.kind() != Kind::kPlanarSt) {
    throw Error("index_planar_st: first graph needs a planar-st out-arc order");
  }
  auto idx = std::make_shared<PlanarIndex>();
  idx->cls = IndexClass::kPlanarSt;
  idx->n = g1.n();
  idx->labels = kameda_labels(g1);
  idx->rank = dipath_ranks(p2);
  while (idx->leaves < idx->n) idx->leaves <<= 1;
  std::vector<std::vector<Point2>> pts(2 * idx->leaves);
  for (Vertex v = 0; v < idx->n; ++v) {
    const Point2 p{idx->labels.l2[v], idx->rank[v], v};
    for (Vertex node = idx->leaves + idx->labels.l1[v] - 1; node >= 1; node >>= 1) {
      pts[node].push_back(p);
    }
  }
  idx->node_ct.resize(pts.size());
  for (std::size_t node = 1; node < pts.size(); ++node) {
    if (!pts[node].empty()) idx->node_ct[node] = CartesianTree(std::move(pts[node]));
  }
  return idx;
}

struct HpdIndex final : JRIndex::Impl {
  explicit HpdIndex(const Digraph& g1, const Digraph& g2) : hpd(g1, g2) {}
  HpdTwoTreesIndex hpd;

  void collect(Vertex b, std::vector<Vertex>& out, QueryStats* stats) const override {
    auto r = hpd.report(b, stats);
    out.insert(out.end(), r.begin(), r.end());
  }
};

// Postorder-based labels from one DFS; `reverse` scans out-arcs right to left.
std::vector<Vertex> dfs_labels(const Digraph& g, Vertex source, bool reverse) {
  const Vertex n = g.n();
  std::vector<Vertex> label(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<std::pair<Vertex, std::size_t>> stack{{source, 0}};
  seen[source] = 1;
  Vertex post = 0;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& outs = g.out_order()[v];
    if (next == outs.size()) {
      label[v] = n - post++;
      stack.pop_back();
      continue;
    }
    const Vertex w = reverse ? outs[outs.size() - 1 - next] : outs[next];
    ++next;
    if (!seen[w]) {
      seen[w] = 1;
      stack.emplace_back(w, 0);
    }
  }
  if (post != n) throw Error("planar st-graph: not every vertex is reachable from the source");
  return label;
}

}  // namespace

KamedaLabels kameda_labels(const Digraph& g) {
  if (g.kind() != Kind::kPlanarSt) {
    throw Error("kameda_labels: graph carries no planar out-arc order");
  }
  Vertex source = kNoVertex;
  Vertex sinks = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.in_degree(v) == 0) {
      if (source != kNoVertex) throw Error("planar st-graph: more than one source");
      source = v;
    }
    sinks += g.out_degree(v) == 0;
  }
  if (source == kNoVertex || sinks != 1) {
    throw Error("planar st-graph: needs exactly one source and one sink");
  }
  KamedaLabels labels{dfs_labels(g, source, false), dfs_labels(g, source, true)};
  if (g.n() <= 4096 && !kameda_property_holds(g, labels)) {
    throw Error("planar st-graph: labels disagree with reachability; bad embedding?");
  }
  return labels;
}

bool kameda_property_holds(const Digraph& g, const KamedaLabels& labels) {
  const ReachMatrix m = transitive_closure(g);
  for (Vertex a = 0; a < g.n(); ++a) {
    for (Vertex b = 0; b < g.n(); ++b) {
      const bool dom = labels.l1[a] <= labels.l1[b] && labels.l2[a] <= labels.l2[b];
      if (dom != m.reach(a, b)) return false;
    }
  }
  return true;
}

JRIndex index_two_paths(const Digraph& p1, const Digraph& p2) {
  if (!is_undirected_path(p1) || !is_undirected_path(p2)) {
    throw Error("index_two_paths: both inputs must be paths");
  }
  return make_index(build_pair_index(IndexClass::kTwoPaths, p1, p2));
}

JRIndex index_tree_path(const Digraph& t1, const Digraph& p2) {
  const bool ok = (is_undirected_tree(t1) && is_undirected_path(p2)) ||
                  (is_undirected_path(t1) && is_undirected_tree(p2));
  if (!ok) throw Error("index_tree_path: expected a tree and a path");
  return make_index(build_pair_index(IndexClass::kTreePath, t1, p2));
}

JRIndex index_two_trees(const Digraph& t1, const Digraph& t2) {
  if (!is_undirected_tree(t1) || !is_undirected_tree(t2)) {
    throw Error("index_two_trees: both inputs must be trees");
  }
  return make_index(build_pair_index(IndexClass::kTwoTrees, t1, t2));
}

JRIndex index_pathcover(const Digraph& g1, const Digraph& g2) {
  return make_index(build_cover_index(g1, g2));
}

JRIndex index_planar_st(const Digraph& g1, const Digraph& p2) {
  if (!is_dipath(p2)) throw Error("index_planar_st: second graph must be a dipath");
  return make_index(build_planar_index(g1, p2));
}

JRIndex index_hpd_two_trees(const Digraph& t1, const Digraph& t2) {
  auto impl = std::make_shared<HpdIndex>(t1, t2);
  impl->cls = IndexClass::kHpdTwoTrees;
  impl->n = t1.n();
  return make_index(std::move(impl));
}

JRIndex build_index(IndexClass cls, const Digraph& g1, const Digraph& g2) {
  switch (cls) {
    case IndexClass::kTwoPaths:
      return index_two_paths(g1, g2);
    case IndexClass::kTreePath:
      return index_tree_path(g1, g2);
    case IndexClass::kTwoTrees:
      return index_two_trees(g1, g2);
    case IndexClass::kPathcover:
      return index_pathcover(g1, g2);
    case IndexClass::kPlanarSt:
      return index_planar_st(g1, g2);
    case IndexClass::kHpdTwoTrees:
      return index_hpd_two_trees(g1, g2);
  }
  throw Error("unknown index class");
}

}  // namespace jr
