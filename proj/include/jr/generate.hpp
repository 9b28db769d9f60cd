#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "jr/graph.hpp"

namespace jr {

// Seeded source of randomness. mt19937_64 has a fixed output sequence, and the
// reductions below are plain arithmetic, so instances are reproducible
// across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  Vertex below(Vertex n) { return static_cast<Vertex>(engine_() % static_cast<std::uint64_t>(n)); }
  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }
  std::vector<Vertex> permutation(Vertex n);

 private:
  std::mt19937_64 engine_;
};

Digraph random_dipath(Vertex n, Rng& rng);
// Path in the undirected sense with independently oriented arcs.
Digraph random_unoriented_path(Vertex n, Rng& rng);
// Uniform random recursive tree over a random labelling; root is random
// unless root_zero is set.
Digraph random_out_tree(Vertex n, Rng& rng, bool root_zero = false);
Digraph random_in_tree(Vertex n, Rng& rng, bool root_zero = false);
Digraph random_unoriented_tree(Vertex n, Rng& rng);
// Arcs between vertices in a hidden random order, each with probability p.
Digraph random_dag(Vertex n, double p, Rng& rng);
// Random digraph with independent arcs (may contain cycles).
Digraph random_digraph(Vertex n, double p, Rng& rng);
// DAG built so that a dipath cover of at most `paths` dipaths exists.
Digraph random_dag_with_cover(Vertex n, Vertex paths, double p, Rng& rng);
// Series-parallel planar st-graph with exactly n >= 2 vertices and a
// left-to-right out-arc order, grown by random subdivisions and parallel
// detours.
Digraph series_parallel_st(Vertex n, Rng& rng);

enum class GenKind { kPath, kUTreeRandom, kOutTree, kInTree, kDagGnp, kBitrev, kSpSt };

std::string_view gen_kind_name(GenKind kind);
GenKind parse_gen_kind(std::string_view name);

struct InstanceSpec {
  GenKind kind = GenKind::kPath;
  Vertex n = 0;
  std::uint64_t seed = 0;
  double arc_probability = 0.1;  // dag-gnp
};

// One graph per requested output (`count` of 1 or 2). The second graph of a
// bitrev instance is the bit-reversed dipath; other kinds draw the second
// graph independently from the same seeded stream.
std::vector<Digraph> generate(const InstanceSpec& spec, int count = 1);

}  // namespace jr
