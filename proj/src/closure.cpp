#include "jr/closure.hpp"

#include <bit>

namespace jr {

ReachMatrix::ReachMatrix(Vertex n)
    : n_(n),
      words_((static_cast<std::size_t>(n) + 63) / 64),
      bits_(static_cast<std::size_t>(n) * words_, 0) {}

ReachMatrix ReachMatrix::identity(Vertex n) {
  ReachMatrix m(n);
  for (Vertex v = 0; v < n; ++v) m.set(v, v);
  return m;
}

ReachMatrix ReachMatrix::full(Vertex n) {
  ReachMatrix m(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) m.set(a, b);
  }
  return m;
}

void ReachMatrix::or_row(Vertex dst, Vertex src) {
  auto d = row(dst);
  auto s = row(src);
  for (std::size_t i = 0; i < words_; ++i) d[i] |= s[i];
}

std::vector<Vertex> ReachMatrix::successors(Vertex a) const {
  std::vector<Vertex> out;
  auto r = row(a);
  for (std::size_t i = 0; i < words_; ++i) {
    for (std::uint64_t w = r[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

std::vector<Vertex> ReachMatrix::predecessors(Vertex b) const {
  std::vector<Vertex> out;
  for (Vertex a = 0; a < n_; ++a) {
    if (reach(a, b)) out.push_back(a);
  }
  return out;
}

std::size_t ReachMatrix::count() const {
  std::size_t c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

bool ReachMatrix::is_reflexive() const {
  for (Vertex v = 0; v < n_; ++v) {
    if (!reach(v, v)) return false;
  }
  return true;
}

bool ReachMatrix::is_transitive() const {
  std::vector<std::uint64_t> acc(words_);
  for (Vertex a = 0; a < n_; ++a) {
    std::fill(acc.begin(), acc.end(), 0);
    for (Vertex b : successors(a)) {
      auto r = row(b);
      for (std::size_t i = 0; i < words_; ++i) acc[i] |= r[i];
    }
    auto r = row(a);
    for (std::size_t i = 0; i < words_; ++i) {
      if ((acc[i] | r[i]) != r[i]) return false;
    }
  }
  return true;
}

ReachMatrix transitive_closure(const Digraph& g) {
  ReachMatrix m = ReachMatrix::identity(g.n());
  if (is_acyclic(g)) {
    auto order = topological_order(g);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      for (Vertex w : g.out(*it)) m.or_row(*it, w);
    }
    return m;
  }
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.out(v)) {
        if (!m.reach(s, w)) {
          m.set(s, w);
          stack.push_back(w);
        }
      }
    }
  }
  return m;
}

ReachMatrix closure_on_prefix(const Digraph& g, Vertex originals) {
  ReachMatrix m = ReachMatrix::identity(originals);
  std::vector<std::uint32_t> mark(g.n(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < originals; ++s) {
    std::uint32_t stamp = static_cast<std::uint32_t>(s) + 1;
    mark[s] = stamp;
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.out(v)) {
        if (mark[w] == stamp) continue;
        mark[w] = stamp;
        if (w < originals) m.set(s, w);
        stack.push_back(w);
      }
    }
  }
  return m;
}

}  // namespace jr
