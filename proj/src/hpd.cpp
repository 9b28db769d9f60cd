#include "jr/hpd.hpp"

#include <algorithm>

namespace jr {

HeavyPathDecomp hpd_build(const RootedTree& t) {
  const Vertex n = t.n();
  HeavyPathDecomp d;
  d.heavy.assign(n, kNoVertex);
  d.path_of.assign(n, kNoVertex);
  d.pos.assign(n, 0);
  d.light_level.assign(n, 0);
  const auto size = subtree_sizes(t);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c : t.children[a]) {
      if (2 * size[c] >= size[a] && (d.heavy[a] == kNoVertex || c < d.heavy[a])) d.heavy[a] = c;
    }
  }
  for (Vertex v : preorder(t)) {
    const Vertex p = t.parent[v];
    if (p != kNoVertex && d.heavy[p] == v) {
      d.path_of[v] = d.path_of[p];
      d.pos[v] = d.pos[p] + 1;
      d.paths[d.path_of[v]].push_back(v);
      d.light_level[v] = d.light_level[p];
    } else {
      d.path_of[v] = static_cast<Vertex>(d.paths.size());
      d.paths.push_back({v});
      d.top_parent.push_back(p);
      d.light_level[v] = p == kNoVertex ? 0 : d.light_level[p] + 1;
    }
  }
  return d;
}

InTreeLabelIndex::InTreeLabelIndex(const RootedTree& t, std::vector<int> label)
    : t_(t), hpd_(hpd_build(t)), label_(std::move(label)) {
  const Vertex n = t.n();
  if (static_cast<Vertex>(label_.size()) != n) throw Error("label count mismatch");
  h_ = label_;
  h_light_ = label_;
  light_.resize(n);
  auto order = preorder(t);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    for (Vertex c : t.children[v]) {
      h_[v] = std::max(h_[v], h_[c]);
      if (c != hpd_.heavy[v]) {
        h_light_[v] = std::max(h_light_[v], h_[c]);
        light_[v].push_back(c);
      }
    }
    std::sort(light_[v].begin(), light_[v].end(),
              [&](Vertex a, Vertex b) { return h_[a] > h_[b]; });
  }
  for (const auto& path : hpd_.paths) {
    std::vector<Point2> pts;
    for (Vertex v : path) pts.push_back({hpd_.pos[v], -h_light_[v], v});
    per_path_.emplace_back(std::move(pts));
  }
}

std::vector<Vertex> InTreeLabelIndex::report(Vertex b, int j, QueryStats* stats) const {
  if (b < 0 || b >= t_.n()) throw Error("intree_report: vertex out of range");
  std::vector<Vertex> out;
  std::vector<Vertex> starts{b};
  std::vector<Vertex> hits;
  std::size_t visits = 0;
  QueryStats local;
  while (!starts.empty()) {
    const Vertex s = starts.back();
    starts.pop_back();
    const Vertex p = hpd_.path_of[s];
    hits.clear();
    // -h_light <= ~j  <=>  h_light > j
    per_path_[p].report(hpd_.pos[s], static_cast<int>(hpd_.paths[p].size()) - 1,
                        ~j, hits, &local);
    for (Vertex d : hits) {
      if (label_[d] > j) out.push_back(d);
      for (Vertex c : light_[d]) {
        ++visits;
        if (h_[c] <= j) break;
        starts.push_back(c);
      }
    }
  }
  if (stats) stats->visits += visits + local.visits;
  std::sort(out.begin(), out.end());
  return out;
}

OutTreeLabelIndex::OutTreeLabelIndex(const RootedTree& t, std::vector<int> label)
    : hpd_(hpd_build(t)) {
  if (static_cast<Vertex>(label.size()) != t.n()) throw Error("label count mismatch");
  for (const auto& path : hpd_.paths) {
    std::vector<Point2> pts;
    for (Vertex v : path) pts.push_back({hpd_.pos[v], -label[v], v});
    per_path_.emplace_back(std::move(pts));
  }
}

std::vector<Vertex> OutTreeLabelIndex::report(Vertex b, int j, QueryStats* stats) const {
  if (b < 0 || b >= static_cast<Vertex>(hpd_.pos.size())) {
    throw Error("outtree_report: vertex out of range");
  }
  std::vector<Vertex> out;
  for (Vertex v = b; v != kNoVertex;) {
    const Vertex p = hpd_.path_of[v];
    per_path_[p].report(0, hpd_.pos[v], ~j, out, stats);
    if (stats) ++stats->probes;
    v = hpd_.top_parent[p];
  }
  std::sort(out.begin(), out.end());
  return out;
}

HpdTwoTreesIndex::HpdTwoTreesIndex(const Digraph& g1, const Digraph& g2) {
  if (g1.n() != g2.n()) throw Error("hpd two-trees: vertex count mismatch");
  RootedTree t1 = rooted_tree(g1);
  RootedTree t2 = rooted_tree(g2);
  if (!t1.out) {
    if (!t2.out) throw Error("hpd two-trees: one input must be an out-tree");
    std::swap(t1, t2);
  }
  const Vertex n = t1.n();
  hpd_ = hpd_build(t1);
  iv2_ = dfs_intervals(t2);
  second_out_ = t2.out;
  const auto& paths = hpd_.paths;
  if (!second_out_) {
    // a reaches b in the in-tree iff s2(a) lies in I2(b).
    for (const auto& path : paths) {
      std::vector<Point2> pts;
      for (Vertex a : path) pts.push_back({iv2_.s[a], hpd_.pos[a], a});
      grounded_.emplace_back(std::move(pts));
    }
    return;
  }
  std::vector<std::vector<Point2>> queries(paths.size());
  query_id_.resize(n);
  for (Vertex b = 0; b < n; ++b) {
    for (Vertex v = b; v != kNoVertex;) {
      const Vertex p = hpd_.path_of[v];
      query_id_[b].push_back(queries[p].size());
      queries[p].push_back({iv2_.s[b], hpd_.path_height(v), b});
      v = hpd_.top_parent[p];
    }
  }
  for (std::size_t p = 0; p < paths.size(); ++p) {
    std::vector<HSegment> segs;
    for (Vertex a : paths[p]) {
      segs.push_back({iv2_.s[a], iv2_.t[a], hpd_.path_height(a), a});
    }
    rays_.emplace_back(segs, queries[p]);
  }
}

std::vector<Vertex> HpdTwoTreesIndex::report(Vertex b, QueryStats* stats) const {
  if (b < 0 || b >= n()) throw Error("hpd two-trees: vertex out of range");
  std::vector<Vertex> out{b};
  std::size_t k = 0;
  for (Vertex v = b; v != kNoVertex; ++k) {
    const Vertex p = hpd_.path_of[v];
    if (stats) {
      ++stats->probes;
      stats->probed.push_back(p);
    }
    if (second_out_) {
      rays_[p].report(query_id_[b][k], out, stats);
    } else {
      grounded_[p].report(iv2_.s[b], iv2_.t[b], hpd_.pos[v], out, stats);
    }
    v = hpd_.top_parent[p];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace jr
