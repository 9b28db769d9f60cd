#include <gtest/gtest.h>

#include <sstream>

#include "jr/cover.hpp"
#include "jr/generate.hpp"
#include "oracle.hpp"

namespace {

using jr::Digraph;
using jr::Vertex;

// Width of the reachability order by brute force over antichains (small n).
Vertex max_antichain(const Digraph& g) {
  auto r = oracle::reach(g);
  Vertex n = g.n();
  Vertex best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (Vertex a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (Vertex b = 0; b < n && ok; ++b) {
        if (a != b && (mask >> b & 1) && r[a][b]) ok = false;
      }
    }
    if (ok) best = std::max<Vertex>(best, std::popcount(mask));
  }
  return best;
}

// Vertex-disjoint cover with paths as graph dipaths, minimal under
// dipath-only covers; on transitively closed inputs this is the width.
TEST(Cover, MinCoverIsValidAndMinimalOnClosures) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 1 + rng.below(12);
    Digraph dag = jr::random_dag(n, 0.3, rng);
    auto pc = jr::min_path_cover(dag);
    EXPECT_TRUE(jr::is_valid_cover(dag, pc));
    auto r = oracle::reach(dag);
    std::vector<jr::Arc> closed;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        if (a != b && r[a][b]) closed.emplace_back(a, b);
      }
    }
    Digraph tc(n, closed);
    EXPECT_EQ(jr::min_path_cover(tc).kappa(), max_antichain(dag));
    EXPECT_LE(pc.kappa(), jr::greedy_path_cover(dag).kappa());
    EXPECT_TRUE(jr::is_valid_cover(dag, jr::greedy_path_cover(dag)));
  }
}

TEST(Cover, KnownShapes) {
  jr::Rng rng(1);
  EXPECT_EQ(jr::min_path_cover(jr::random_dipath(10, rng)).kappa(), 1);
  EXPECT_EQ(jr::min_path_cover(Digraph(4, {})).kappa(), 4);
  EXPECT_EQ(jr::min_path_cover(Digraph(4, {{0, 1}, {0, 2}, {0, 3}})).kappa(), 3);
  EXPECT_LE(jr::min_path_cover(jr::random_dag_with_cover(40, 3, 0.1, rng)).kappa(), 3);
  EXPECT_THROW(jr::min_path_cover(Digraph(2, {{0, 1}, {1, 0}})), jr::Error);
}

TEST(Cover, InvalidCoversRejected) {
  Digraph g(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(jr::is_valid_cover(g, jr::cover_from_paths(3, {{0, 2}, {1}})));
  EXPECT_TRUE(jr::is_valid_cover(g, jr::cover_from_paths(3, {{0, 1}, {2}})));
  EXPECT_THROW(jr::cover_from_paths(3, {{0, 1}, {1, 2}}), jr::Error);
  EXPECT_THROW(jr::cover_from_paths(3, {{0, 1}}), jr::Error);
}

TEST(Cover, FromRanksMatchesScan) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    jr::Rng rng(seed);
    Digraph g = jr::random_dag(1 + rng.below(40), 0.1, rng);
    auto pc = jr::min_path_cover(g);
    auto fr = jr::from_ranks(g, pc);
    auto r = oracle::reach(g);
    for (Vertex v = 0; v < g.n(); ++v) {
      for (Vertex i = 0; i < pc.kappa(); ++i) {
        Vertex expect = jr::kNoVertex;
        for (Vertex u : pc.paths[i]) {
          if (r[u][v]) expect = pc.rank[u];
        }
        EXPECT_EQ(fr.at(v, i), expect);
      }
    }
  }
}

TEST(Cover, TextRoundTrip) {
  jr::Rng rng(3);
  Digraph g = jr::random_dag(25, 0.1, rng);
  auto pc = jr::min_path_cover(g);
  std::stringstream ss;
  jr::write_cover(ss, pc);
  auto back = jr::read_cover(ss, 25);
  EXPECT_EQ(back.paths, pc.paths);
  std::stringstream bad("2\n0 1\n");
  EXPECT_THROW(jr::read_cover(bad, 3), jr::Error);
}

}  // namespace
