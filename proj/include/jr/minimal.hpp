#pragma once

#include "jr/closure.hpp"
#include "jr/graph.hpp"

namespace jr {

// Entrywise AND of two relations over the same vertex set.
ReachMatrix and_closure(const ReachMatrix& m1, const ReachMatrix& m2);

// Arc-minimal digraph whose closure is m. Mutually related vertices become
// one cycle in id order; between classes only covering arcs are kept.
// Throws Error unless m is reflexive and transitive.
Digraph transitive_reduction(const ReachMatrix& m);

// Smallest join graph without Steiner vertices.
Digraph minimal_restricted_join(const Digraph& g1, const Digraph& g2);

}  // namespace jr
