#include "jr/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "jr/explicit.hpp"

namespace jr {

std::vector<Vertex> Rng::permutation(Vertex n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (Vertex i = n - 1; i > 0; --i) std::swap(p[i], p[below(i + 1)]);
  return p;
}

Digraph random_dipath(Vertex n, Rng& rng) {
  auto p = rng.permutation(n);
  std::vector<Arc> arcs;
  for (Vertex i = 0; i + 1 < n; ++i) arcs.emplace_back(p[i], p[i + 1]);
  return Digraph(n, std::move(arcs), Kind::kPath);
}

Digraph random_unoriented_path(Vertex n, Rng& rng) {
  auto p = rng.permutation(n);
  std::vector<Arc> arcs;
  for (Vertex i = 0; i + 1 < n; ++i) {
    if (rng.chance(0.5)) {
      arcs.emplace_back(p[i], p[i + 1]);
    } else {
      arcs.emplace_back(p[i + 1], p[i]);
    }
  }
  return Digraph(n, std::move(arcs), Kind::kUTree);
}

namespace {

// Parent-child pairs of a random recursive tree over a random labelling.
std::vector<Arc> random_tree_edges(Vertex n, Rng& rng, bool root_zero) {
  auto p = rng.permutation(n);
  if (root_zero && n > 0) {
    std::swap(p[0], *std::find(p.begin(), p.end(), 0));
  }
  std::vector<Arc> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(p[rng.below(i)], p[i]);
  return edges;
}

}  // namespace

Digraph random_out_tree(Vertex n, Rng& rng, bool root_zero) {
  return Digraph(n, random_tree_edges(n, rng, root_zero), Kind::kOutTree);
}

Digraph random_in_tree(Vertex n, Rng& rng, bool root_zero) {
  auto edges = random_tree_edges(n, rng, root_zero);
  for (auto& [u, v] : edges) std::swap(u, v);
  return Digraph(n, std::move(edges), Kind::kInTree);
}

Digraph random_unoriented_tree(Vertex n, Rng& rng) {
  auto edges = random_tree_edges(n, rng, false);
  for (auto& [u, v] : edges) {
    if (rng.chance(0.5)) std::swap(u, v);
  }
  return Digraph(n, std::move(edges), Kind::kUTree);
}

Digraph random_dag(Vertex n, double p, Rng& rng) {
  auto order = rng.permutation(n);
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.chance(p)) arcs.emplace_back(order[i], order[j]);
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph random_digraph(Vertex n, double p, Rng& rng) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && rng.chance(p)) arcs.emplace_back(u, v);
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph random_dag_with_cover(Vertex n, Vertex paths, double p, Rng& rng) {
  // Deal the hidden topological order into `paths` chains, link each chain,
  // and add sparse forward arcs.
  auto order = rng.permutation(n);
  std::vector<Vertex> last(paths, kNoVertex);
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    Vertex c = rng.below(paths);
    if (last[c] != kNoVertex) arcs.emplace_back(last[c], order[i]);
    last[c] = order[i];
  }
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.chance(p)) arcs.emplace_back(order[i], order[j]);
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph series_parallel_st(Vertex n, Rng& rng) {
  if (n < 2) throw Error("series_parallel_st: need at least two vertices");
  std::vector<std::vector<Vertex>> outs(2);
  std::vector<std::vector<Vertex>> ins(2);
  std::vector<Arc> edges{{0, 1}};
  outs[0] = {1};
  ins[1] = {0};
  auto replace = [](std::vector<Vertex>& list, Vertex from, Vertex to) {
    *std::find(list.begin(), list.end(), from) = to;
  };
  auto insert_beside = [](std::vector<Vertex>& list, Vertex anchor, Vertex w,
                          bool left) {
    auto it = std::find(list.begin(), list.end(), anchor);
    list.insert(left ? it : it + 1, w);
  };
  for (Vertex w = 2; w < n; ++w) {
    const std::size_t e = rng.below(static_cast<Vertex>(edges.size()));
    const auto [u, v] = edges[e];
    outs.push_back({v});
    ins.push_back({u});
    if (rng.chance(0.5)) {
      // Series: subdivide (u, v).
      replace(outs[u], v, w);
      replace(ins[v], u, w);
      edges[e] = {u, w};
      edges.emplace_back(w, v);
    } else {
      // Parallel: detour u -> w -> v on one side of (u, v).
      bool left = rng.chance(0.5);
      insert_beside(outs[u], v, w, left);
      insert_beside(ins[v], u, w, left);
      edges.emplace_back(u, w);
      edges.emplace_back(w, v);
    }
  }
  auto label = rng.permutation(n);
  std::vector<Arc> arcs;
  for (const auto& [u, v] : edges) arcs.emplace_back(label[u], label[v]);
  std::vector<std::vector<Vertex>> order(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : outs[v]) order[label[v]].push_back(label[w]);
  }
  return Digraph(n, std::move(arcs), std::move(order));
}

std::string_view gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::kPath:
      return "path";
    case GenKind::kUTreeRandom:
      return "utree-random";
    case GenKind::kOutTree:
      return "out-tree";
    case GenKind::kInTree:
      return "in-tree";
    case GenKind::kDagGnp:
      return "dag-gnp";
    case GenKind::kBitrev:
      return "bitrev";
    case GenKind::kSpSt:
      return "sp-st";
  }
  return "path";
}

GenKind parse_gen_kind(std::string_view name) {
  for (GenKind k : {GenKind::kPath, GenKind::kUTreeRandom, GenKind::kOutTree,
                    GenKind::kInTree, GenKind::kDagGnp, GenKind::kBitrev,
                    GenKind::kSpSt}) {
    if (gen_kind_name(k) == name) return k;
  }
  throw Error("unknown generator kind '" + std::string(name) + "'");
}

std::vector<Digraph> generate(const InstanceSpec& spec, int count) {
  if (count < 1 || count > 2) throw Error("generate: count must be 1 or 2");
  if (spec.n < 1) throw Error("generate: n must be positive");
  if (spec.kind == GenKind::kDagGnp &&
      !(spec.arc_probability >= 0.0 && spec.arc_probability <= 1.0)) {
    throw Error("generate: arc probability must lie in [0, 1]");
  }
  if (spec.kind == GenKind::kBitrev) {
    auto [p1, p2] = gen_bitreversal(spec.n);
    std::vector<Digraph> out{std::move(p1)};
    if (count == 2) out.push_back(std::move(p2));
    return out;
  }
  Rng rng(spec.seed);
  std::vector<Digraph> out;
  for (int i = 0; i < count; ++i) {
    switch (spec.kind) {
      case GenKind::kPath:
        out.push_back(random_dipath(spec.n, rng));
        break;
      case GenKind::kUTreeRandom:
        out.push_back(random_unoriented_tree(spec.n, rng));
        break;
      case GenKind::kOutTree:
        out.push_back(random_out_tree(spec.n, rng));
        break;
      case GenKind::kInTree:
        out.push_back(random_in_tree(spec.n, rng));
        break;
      case GenKind::kDagGnp:
        out.push_back(random_dag(spec.n, spec.arc_probability, rng));
        break;
      case GenKind::kSpSt:
        if (spec.n < 2) throw Error("generate: sp-st needs n >= 2");
        out.push_back(series_parallel_st(spec.n, rng));
        break;
      case GenKind::kBitrev:
        break;
    }
  }
  return out;
}

}  // namespace jr
