#include "jr/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace jr {

namespace {

void build_csr(Vertex n, const std::vector<Arc>& arcs, bool forward,
               std::vector<std::size_t>& off, std::vector<Vertex>& adj) {
  off.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : arcs) ++off[(forward ? u : v) + 1];
  for (Vertex v = 0; v < n; ++v) off[v + 1] += off[v];
  adj.resize(arcs.size());
  std::vector<std::size_t> pos(off.begin(), off.end() - 1);
  for (const auto& [u, v] : arcs) {
    if (forward) {
      adj[pos[u]++] = v;
    } else {
      adj[pos[v]++] = u;
    }
  }
  // Arcs are sorted by (u, v); in-lists need an explicit sort.
  if (!forward) {
    for (Vertex v = 0; v < n; ++v) {
      std::sort(adj.begin() + off[v], adj.begin() + off[v + 1]);
    }
  }
}

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kDigraph:
      return "digraph";
    case Kind::kPath:
      return "path";
    case Kind::kOutTree:
      return "out-tree";
    case Kind::kInTree:
      return "in-tree";
    case Kind::kUTree:
      return "utree";
    case Kind::kPlanarSt:
      return "planar-st";
  }
  return "digraph";
}

Kind parse_kind(std::string_view name) {
  for (Kind k : {Kind::kDigraph, Kind::kPath, Kind::kOutTree, Kind::kInTree,
                 Kind::kUTree, Kind::kPlanarSt}) {
    if (kind_name(k) == name) return k;
  }
  throw Error("unknown graph kind '" + std::string(name) + "'");
}

Digraph::Digraph(Vertex n, std::vector<Arc> arcs, Kind kind)
    : n_(n), kind_(kind), arcs_(std::move(arcs)) {
  if (n < 0) throw Error("negative vertex count");
  for (const auto& [u, v] : arcs_) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      std::ostringstream os;
      os << "arc (" << u << "," << v << ") out of range for n=" << n;
      throw Error(os.str());
    }
  }
  std::erase_if(arcs_, [](const Arc& a) { return a.first == a.second; });
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  build_csr(n_, arcs_, true, out_off_, out_adj_);
  build_csr(n_, arcs_, false, in_off_, in_adj_);
  if (kind_ == Kind::kPlanarSt) {
    throw Error("planar-st digraph requires an out-arc order");
  }
  validate_kind();
}

Digraph::Digraph(Vertex n, std::vector<Arc> arcs,
                 std::vector<std::vector<Vertex>> out_order)
    : Digraph(n, std::move(arcs), Kind::kDigraph) {
  kind_ = Kind::kPlanarSt;
  if (static_cast<Vertex>(out_order.size()) != n) {
    throw Error("out-arc order must list every vertex");
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& order = out_order[v];
    // Duplicate arcs collapse in the arc set; keep the first occurrence.
    std::vector<Vertex> dedup;
    for (Vertex w : order) {
      if (w == v) continue;
      if (std::find(dedup.begin(), dedup.end(), w) == dedup.end()) {
        dedup.push_back(w);
      }
    }
    std::vector<Vertex> sorted = dedup;
    std::sort(sorted.begin(), sorted.end());
    auto outs = out(v);
    if (!std::equal(sorted.begin(), sorted.end(), outs.begin(), outs.end())) {
      std::ostringstream os;
      os << "out-arc order of vertex " << v << " does not match its out-arcs";
      throw Error(os.str());
    }
    order = std::move(dedup);
  }
  out_order_ = std::move(out_order);
  validate_kind();
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  auto o = out(u);
  return std::binary_search(o.begin(), o.end(), v);
}

Digraph Digraph::with_kind(Kind kind) const {
  if (kind == Kind::kPlanarSt) {
    if (kind_ == Kind::kPlanarSt) return *this;
    throw Error("cannot retag as planar-st without an embedding");
  }
  return Digraph(n_, arcs_, kind);
}

Digraph Digraph::reversed() const {
  std::vector<Arc> rev;
  rev.reserve(arcs_.size());
  for (const auto& [u, v] : arcs_) rev.emplace_back(v, u);
  Kind k = kind_;
  if (k == Kind::kOutTree) {
    k = Kind::kInTree;
  } else if (k == Kind::kInTree) {
    k = Kind::kOutTree;
  } else if (k == Kind::kPlanarSt) {
    k = Kind::kDigraph;
  }
  return Digraph(n_, std::move(rev), k);
}

void Digraph::validate_kind() const {
  auto fail = [&](const char* what) {
    throw Error(std::string("graph is not a valid ") +
                std::string(kind_name(kind_)) + ": " + what);
  };
  switch (kind_) {
    case Kind::kDigraph:
      return;
    case Kind::kPath: {
      for (Vertex v = 0; v < n_; ++v) {
        if (out_degree(v) > 1 || in_degree(v) > 1) fail("degree exceeds 1");
      }
      if (n_ > 0 && m() != static_cast<std::size_t>(n_ - 1)) fail("not connected");
      if (!is_weakly_connected(*this)) fail("not connected");
      return;
    }
    case Kind::kOutTree:
    case Kind::kInTree: {
      bool out_tree = kind_ == Kind::kOutTree;
      int roots = 0;
      for (Vertex v = 0; v < n_; ++v) {
        std::size_t d = out_tree ? in_degree(v) : out_degree(v);
        if (d > 1) fail("a vertex has two parents");
        if (d == 0) ++roots;
      }
      if (n_ > 0 && roots != 1) fail("not exactly one root");
      if (!is_undirected_tree(*this)) fail("underlying graph is not a tree");
      return;
    }
    case Kind::kUTree:
      if (!is_undirected_tree(*this)) fail("underlying graph is not a tree");
      return;
    case Kind::kPlanarSt: {
      int sources = 0;
      int sinks = 0;
      for (Vertex v = 0; v < n_; ++v) {
        if (in_degree(v) == 0) ++sources;
        if (out_degree(v) == 0) ++sinks;
      }
      if (n_ > 0 && (sources != 1 || sinks != 1)) {
        fail("needs exactly one source and one sink");
      }
      if (!is_acyclic(*this)) fail("has a cycle");
      return;
    }
  }
}

bool operator==(const Digraph& a, const Digraph& b) {
  return a.n() == b.n() && a.kind() == b.kind() &&
         std::equal(a.arcs().begin(), a.arcs().end(), b.arcs().begin(),
                    b.arcs().end());
}

std::vector<Vertex> topological_order(const Digraph& g) {
  std::vector<std::size_t> indeg(g.n());
  std::vector<Vertex> order;
  order.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    indeg[v] = g.in_degree(v);
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : g.out(order[i])) {
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  if (static_cast<Vertex>(order.size()) != g.n()) {
    throw Error("digraph has a cycle");
  }
  return order;
}

bool is_acyclic(const Digraph& g) {
  try {
    topological_order(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_weakly_connected(const Digraph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (auto nbrs : {g.out(v), g.in(v)}) {
      for (Vertex w : nbrs) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
  }
  return count == g.n();
}

bool is_undirected_tree(const Digraph& g) {
  if (g.n() == 0) return true;
  // Antiparallel arcs would form an undirected 2-cycle.
  for (const auto& [u, v] : g.arcs()) {
    if (g.has_arc(v, u)) return false;
  }
  return g.m() == static_cast<std::size_t>(g.n() - 1) && is_weakly_connected(g);
}

bool is_undirected_path(const Digraph& g) {
  if (!is_undirected_tree(g)) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.in_degree(v) + g.out_degree(v) > 2) return false;
  }
  return true;
}

std::vector<Vertex> dipath_order(const Digraph& g) {
  std::vector<Vertex> order;
  if (g.n() == 0) return order;
  Vertex start = kNoVertex;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.in_degree(v) > 1 || g.out_degree(v) > 1) {
      throw Error("not a dipath: degree exceeds 1");
    }
    if (g.in_degree(v) == 0) {
      if (start != kNoVertex) throw Error("not a dipath: two sources");
      start = v;
    }
  }
  if (start == kNoVertex) throw Error("not a dipath: no source");
  for (Vertex v = start;;) {
    order.push_back(v);
    auto o = g.out(v);
    if (o.empty()) break;
    v = o.front();
  }
  if (static_cast<Vertex>(order.size()) != g.n()) {
    throw Error("not a dipath: disconnected");
  }
  return order;
}

std::vector<Vertex> dipath_ranks(const Digraph& g) {
  auto order = dipath_order(g);
  std::vector<Vertex> rank(g.n());
  for (Vertex i = 0; i < g.n(); ++i) rank[order[i]] = i;
  return rank;
}

RootedTree rooted_tree_from_parents(std::vector<Vertex> parent, bool out) {
  RootedTree t;
  t.out = out;
  t.parent = std::move(parent);
  t.children.assign(t.parent.size(), {});
  for (Vertex v = 0; v < t.n(); ++v) {
    if (t.parent[v] == kNoVertex) {
      if (t.root != kNoVertex) throw Error("parent array has two roots");
      t.root = v;
    } else {
      t.children[t.parent[v]].push_back(v);
    }
  }
  if (t.n() > 0 && t.root == kNoVertex) throw Error("parent array has no root");
  return t;
}

RootedTree rooted_tree(const Digraph& g) {
  if (!is_undirected_tree(g)) throw Error("not a tree");
  bool out_ok = true;
  bool in_ok = true;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.in_degree(v) > 1) out_ok = false;
    if (g.out_degree(v) > 1) in_ok = false;
  }
  // A dipath satisfies both; prefer the out-tree reading unless the tag says
  // otherwise.
  bool out;
  if (g.kind() == Kind::kInTree) {
    if (!in_ok) throw Error("not an in-tree");
    out = false;
  } else if (g.kind() == Kind::kOutTree || g.kind() == Kind::kPath) {
    if (!out_ok) throw Error("not an out-tree");
    out = true;
  } else if (out_ok) {
    out = true;
  } else if (in_ok) {
    out = false;
  } else {
    throw Error("not a rooted tree");
  }
  std::vector<Vertex> parent(g.n(), kNoVertex);
  for (const auto& [u, v] : g.arcs()) {
    if (out) {
      parent[v] = u;
    } else {
      parent[u] = v;
    }
  }
  return rooted_tree_from_parents(std::move(parent), out);
}

}  // namespace jr
