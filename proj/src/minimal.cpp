#include "jr/minimal.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace jr {

ReachMatrix and_closure(const ReachMatrix& m1, const ReachMatrix& m2) {
  if (m1.n() != m2.n()) throw Error("and_closure: size mismatch");
  ReachMatrix out = m1;
  for (Vertex a = 0; a < out.n(); ++a) {
    auto dst = out.row(a);
    auto src = m2.row(a);
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] &= src[w];
  }
  return out;
}

Digraph transitive_reduction(const ReachMatrix& m) {
  if (!m.is_reflexive() || !m.is_transitive()) {
    throw Error("transitive_reduction: relation is not a closure");
  }
  const Vertex n = m.n();
  const std::size_t words = m.words_per_row();
  // Class representative = smallest member.
  std::vector<Vertex> rep(n, kNoVertex);
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) {
    if (rep[v] != kNoVertex) continue;
    Vertex prev = v;
    for (Vertex w = v; w < n; ++w) {
      if (m.reach(v, w) && m.reach(w, v)) {
        rep[w] = v;
        if (w != v) arcs.emplace_back(prev, w);
        prev = w;
      }
    }
    if (prev != v) arcs.emplace_back(prev, v);
  }
  std::vector<std::uint64_t> reps(words, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (rep[v] == v) reps[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  // S(u): representatives strictly above u. Keep u -> v iff v is in S(u)
  // but in no S(w) for w in S(u).
  std::vector<std::uint64_t> covered(words);
  for (Vertex u = 0; u < n; ++u) {
    if (rep[u] != u) continue;
    auto row = m.row(u);
    std::fill(covered.begin(), covered.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = row[w] & reps[w];
      while (bits) {
        Vertex x = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        if (x == u) continue;
        auto xr = m.row(x);
        for (std::size_t k = 0; k < words; ++k) {
          std::uint64_t bitsx = xr[k];
          if (k == static_cast<std::size_t>(x >> 6)) {
            bitsx &= ~(std::uint64_t{1} << (x & 63));
          }
          covered[k] |= bitsx;
        }
      }
    }
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t keep = row[w] & reps[w] & ~covered[w];
      while (keep) {
        Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(keep));
        keep &= keep - 1;
        if (v != u) arcs.emplace_back(u, v);
      }
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph minimal_restricted_join(const Digraph& g1, const Digraph& g2) {
  if (g1.n() != g2.n()) throw Error("minimal_restricted_join: vertex count mismatch");
  return transitive_reduction(
      and_closure(transitive_closure(g1), transitive_closure(g2)));
}

}  // namespace jr
