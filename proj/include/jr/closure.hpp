#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jr/graph.hpp"

namespace jr {

// n x n boolean relation stored as packed 64-bit rows.
class ReachMatrix {
 public:
  ReachMatrix() = default;
  explicit ReachMatrix(Vertex n);

  static ReachMatrix identity(Vertex n);
  static ReachMatrix full(Vertex n);

  Vertex n() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool reach(Vertex a, Vertex b) const {
    return (bits_[a * words_ + (b >> 6)] >> (b & 63)) & 1U;
  }
  void set(Vertex a, Vertex b, bool value = true) {
    auto& w = bits_[a * words_ + (b >> 6)];
    std::uint64_t mask = std::uint64_t{1} << (b & 63);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const std::uint64_t> row(Vertex a) const {
    return {bits_.data() + a * words_, words_};
  }
  std::span<std::uint64_t> row(Vertex a) {
    return {bits_.data() + a * words_, words_};
  }
  void or_row(Vertex dst, Vertex src);

  std::vector<Vertex> successors(Vertex a) const;
  std::vector<Vertex> predecessors(Vertex b) const;
  std::size_t count() const;

  bool is_reflexive() const;
  // One step of self-composition leaves the relation unchanged.
  bool is_transitive() const;

  friend bool operator==(const ReachMatrix&, const ReachMatrix&) = default;

 private:
  Vertex n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Reflexive transitive closure. Row-OR in reverse topological order for DAGs,
// per-source BFS otherwise.
ReachMatrix transitive_closure(const Digraph& g);

// Reflexive closure restricted to the first `originals` vertices of g, with
// paths allowed through any vertex (used to project away Steiner vertices).
ReachMatrix closure_on_prefix(const Digraph& g, Vertex originals);

}  // namespace jr
