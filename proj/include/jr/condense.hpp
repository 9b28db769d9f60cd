#pragma once

#include <vector>

#include "jr/graph.hpp"

namespace jr {

// Strong components; comp[v] numbers components in topological order of the
// condensation (sources first).
struct StrongComponents {
  std::vector<Vertex> comp;
  Vertex count = 0;
};

StrongComponents strong_components(const Digraph& g);

// Acyclic replacement of a digraph pair. Vertices of g1_hat/g2_hat are
// subcomponents: maximal vertex sets that are strongly connected in both
// inputs. Joint reachability between original vertices is preserved:
//   a ~>J b  iff  sub_of[a] == sub_of[b] or sub_of[a] reaches sub_of[b] in
//   both g1_hat and g2_hat.
struct CondensedPair {
  Digraph g1_hat;
  Digraph g2_hat;
  std::vector<Vertex> sub_of;
  std::vector<std::vector<Vertex>> members;

  Vertex subcomponent_count() const {
    return static_cast<Vertex>(members.size());
  }
};

CondensedPair condense_pair(const Digraph& g1, const Digraph& g2);

}  // namespace jr
