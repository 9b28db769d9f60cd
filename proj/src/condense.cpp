#include "jr/condense.hpp"

#include <algorithm>
#include <map>

namespace jr {

StrongComponents strong_components(const Digraph& g) {
  // Iterative Tarjan. Components complete in reverse topological order.
  const Vertex n = g.n();
  std::vector<Vertex> index(n, kNoVertex);
  std::vector<Vertex> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<Vertex> tarjan_comp(n, kNoVertex);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;
  Vertex counter = 0;
  Vertex completed = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kNoVertex) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto outs = g.out(f.v);
      if (f.next < outs.size()) {
        Vertex w = outs[f.next++];
        if (index[w] == kNoVertex) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          tarjan_comp[w] = completed;
        } while (w != v);
        ++completed;
      }
    }
  }
  StrongComponents sc;
  sc.count = completed;
  sc.comp.resize(n);
  for (Vertex v = 0; v < n; ++v) sc.comp[v] = completed - 1 - tarjan_comp[v];
  return sc;
}

CondensedPair condense_pair(const Digraph& g1, const Digraph& g2) {
  if (g1.n() != g2.n()) throw Error("condense_pair: vertex sets differ");
  const Vertex n = g1.n();
  const StrongComponents c1 = strong_components(g1);
  const StrongComponents c2 = strong_components(g2);

  CondensedPair out;
  out.sub_of.assign(n, kNoVertex);
  std::map<std::pair<Vertex, Vertex>, Vertex> id_of;
  for (Vertex v = 0; v < n; ++v) {
    auto [it, fresh] = id_of.try_emplace({c1.comp[v], c2.comp[v]},
                                         static_cast<Vertex>(out.members.size()));
    if (fresh) out.members.emplace_back();
    out.sub_of[v] = it->second;
    out.members[it->second].push_back(v);
  }
  const Vertex subs = out.subcomponent_count();

  // Arcs of one hat graph: chain the subcomponents of each own-component in
  // the other graph's topological order, then attach inter-component arcs
  // from the last subcomponent to the first.
  auto build_hat = [&](const Digraph& g, const StrongComponents& own,
                       const StrongComponents& other) {
    std::vector<std::vector<std::pair<Vertex, Vertex>>> by_comp(own.count);
    for (Vertex s = 0; s < subs; ++s) {
      Vertex rep = out.members[s].front();
      by_comp[own.comp[rep]].emplace_back(other.comp[rep], s);
    }
    std::vector<Vertex> first(own.count, kNoVertex);
    std::vector<Vertex> last(own.count, kNoVertex);
    std::vector<Arc> arcs;
    for (Vertex c = 0; c < own.count; ++c) {
      auto& list = by_comp[c];
      std::sort(list.begin(), list.end());
      for (std::size_t i = 0; i + 1 < list.size(); ++i) {
        arcs.emplace_back(list[i].second, list[i + 1].second);
      }
      if (!list.empty()) {
        first[c] = list.front().second;
        last[c] = list.back().second;
      }
    }
    for (const auto& [u, v] : g.arcs()) {
      Vertex cu = own.comp[u];
      Vertex cv = own.comp[v];
      if (cu != cv) arcs.emplace_back(last[cu], first[cv]);
    }
    return Digraph(subs, std::move(arcs));
  };
  out.g1_hat = build_hat(g1, c1, c2);
  out.g2_hat = build_hat(g2, c2, c1);
  return out;
}

}  // namespace jr
