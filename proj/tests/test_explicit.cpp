#include <gtest/gtest.h>

#include <bit>
#include <sstream>

#include "jr/explicit.hpp"
#include "jr/generate.hpp"
#include "jr/pieces.hpp"
#include "oracle.hpp"

namespace {

using jr::Digraph;
using jr::Vertex;

int clog2(Vertex n) {
  int b = 0;
  while ((Vertex{1} << b) < n) ++b;
  return b;
}

void expect_join(const jr::JoinGraph& j, const Digraph& g1, const Digraph& g2) {
  ASSERT_EQ(j.original_count, g1.n());
  EXPECT_EQ(oracle::reach(j.graph, j.original_count), oracle::join(g1, g2));
}

TEST(SplitPath, OrientedPathIsItself) {
  Digraph p(4, {{2, 0}, {0, 3}, {3, 1}});
  auto parts = jr::split_unoriented_path(p);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], (std::vector<Vertex>{2, 0, 3, 1}));
}

TEST(SplitPath, AlternatingGivesTwoVertexPieces) {
  Digraph p(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}}, jr::Kind::kUTree);
  auto parts = jr::split_unoriented_path(p);
  EXPECT_EQ(parts.size(), 4u);
  for (const auto& s : parts) EXPECT_EQ(s.size(), 2u);
}

TEST(SplitPath, RandomCoverIsExact) {
  jr::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Digraph p = jr::random_unoriented_path(50, rng);
    auto parts = jr::split_unoriented_path(p);
    std::vector<int> mult(50, 0);
    std::size_t arcs = 0;
    for (const auto& s : parts) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        ++mult[s[i]];
        if (i > 0) {
          EXPECT_TRUE(p.has_arc(s[i - 1], s[i]));
          ++arcs;
        }
      }
    }
    EXPECT_EQ(arcs, p.m());
    for (int m : mult) EXPECT_LE(m, 2);
  }
}

TEST(BitReversal, Coordinates) {
  auto [p1, p2] = jr::gen_bitreversal(16);
  auto r2 = jr::dipath_ranks(p2);
  EXPECT_EQ(r2[1], 8);
  auto [q1, q2] = jr::gen_bitreversal(2);
  EXPECT_EQ(jr::dipath_ranks(q2), (std::vector<Vertex>{0, 1}));
  EXPECT_THROW(jr::gen_bitreversal(12), jr::Error);
}

TEST(BitReversal, SingleBitPairsAreDominances) {
  auto [p1, p2] = jr::gen_bitreversal(16);
  auto r2 = jr::dipath_ranks(p2);
  int pairs = 0;
  for (Vertex a = 0; a < 16; ++a) {
    for (Vertex b = 0; b < 16; ++b) {
      if (a < b && std::popcount(static_cast<unsigned>(a ^ b)) == 1) {
        ++pairs;
        EXPECT_LT(r2[a], r2[b]);
      }
    }
  }
  EXPECT_EQ(pairs, 32);
}

TEST(TwoPaths, IdenticalPathsGivePathOrder) {
  jr::Rng rng(1);
  Digraph p = jr::random_dipath(20, rng);
  auto j = jr::build_two_paths(p, p);
  auto rel = oracle::reach(j.graph, 20);
  auto r = jr::dipath_ranks(p);
  for (Vertex a = 0; a < 20; ++a) {
    for (Vertex b = 0; b < 20; ++b) EXPECT_EQ(rel[a][b] != 0, r[a] <= r[b]);
  }
}

TEST(TwoPaths, ReversedPathsRelateNothing) {
  jr::Rng rng(2);
  Digraph p = jr::random_dipath(20, rng);
  auto j = jr::build_two_paths(p, p.reversed());
  auto rel = oracle::reach(j.graph, 20);
  for (Vertex a = 0; a < 20; ++a) {
    for (Vertex b = 0; b < 20; ++b) EXPECT_EQ(rel[a][b] != 0, a == b);
  }
}

TEST(TwoPaths, BitReversalIsDominance) {
  auto [p1, p2] = jr::gen_bitreversal(16);
  auto j = jr::build_two_paths(p1, p2);
  auto rel = oracle::reach(j.graph, 16);
  auto r2 = jr::dipath_ranks(p2);
  for (Vertex a = 0; a < 16; ++a) {
    for (Vertex b = 0; b < 16; ++b) {
      EXPECT_EQ(rel[a][b] != 0, a <= b && r2[a] <= r2[b]);
    }
  }
}

TEST(TwoPaths, SizeBoundAndRandom) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 1 + rng.below(64);
    Digraph p1 = jr::random_dipath(n, rng);
    Digraph p2 = jr::random_dipath(n, rng);
    auto j = jr::build_two_paths(p1, p2);
    expect_join(j, p1, p2);
    EXPECT_LE(j.size(), static_cast<std::size_t>(3 * n * (clog2(n) + 1)));
  }
}

TEST(TwoPaths, UnorientedPaths) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 1 + rng.below(40);
    Digraph p1 = jr::random_unoriented_path(n, rng);
    Digraph p2 = jr::random_unoriented_path(n, rng);
    expect_join(jr::build_two_paths(p1, p2), p1, p2);
  }
}

TEST(TwoPaths, SteinerTagsStayInTheirHalf) {
  auto [p1, p2] = jr::gen_bitreversal(64);
  auto j = jr::build_two_paths(p1, p2);
  // x1 is the rank in p1, which is the vertex id itself.
  for (Vertex s = 0; s < j.steiner_count(); ++s) {
    const auto& tag = j.steiner[s];
    for (Vertex w : j.graph.out(j.original_count + s)) {
      if (w >= j.original_count) continue;
      EXPECT_GE(w, tag.mid);
      EXPECT_LE(w, tag.hi);
    }
    for (Vertex u : j.graph.in(j.original_count + s)) {
      if (u >= j.original_count) continue;
      EXPECT_GE(u, tag.lo);
      EXPECT_LT(u, tag.mid);
    }
  }
}

TEST(TreePath, ChainMatchingPathIsPathOrder) {
  jr::Rng rng(3);
  Digraph p = jr::random_dipath(15, rng);
  auto j = jr::build_tree_path(p.with_kind(jr::Kind::kOutTree), p);
  expect_join(j, p, p);
}

TEST(TreePath, OutStarWithRootLastIsReflexive) {
  std::vector<jr::Arc> star, path;
  for (Vertex v = 1; v < 8; ++v) star.emplace_back(0, v);
  for (Vertex v = 1; v + 1 < 8; ++v) path.emplace_back(v, v + 1);
  path.emplace_back(7, 0);
  Digraph t(8, star, jr::Kind::kOutTree);
  Digraph p(8, path, jr::Kind::kPath);
  auto rel = oracle::reach(jr::build_tree_path(t, p).graph, 8);
  for (Vertex a = 0; a < 8; ++a) {
    for (Vertex b = 0; b < 8; ++b) EXPECT_EQ(rel[a][b] != 0, a == b);
  }
}

TEST(TreePath, RandomBothOrientations) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 1 + rng.below(48);
    Digraph t = seed % 2 ? jr::random_out_tree(n, rng) : jr::random_in_tree(n, rng);
    Digraph p = jr::random_dipath(n, rng);
    auto j = jr::build_tree_path(t, p);
    expect_join(j, t, p);
    EXPECT_LE(j.size(), static_cast<std::size_t>(3 * n * (clog2(n) + 1)));
  }
}

TEST(TwoTrees, IdenticalOutTreesGiveAncestry) {
  jr::Rng rng(4);
  Digraph t = jr::random_out_tree(30, rng);
  expect_join(jr::build_two_trees(t, t), t, t);
}

TEST(TwoTrees, RandomAllOrientations) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 1 + rng.below(48);
    Digraph t1 = seed & 1 ? jr::random_out_tree(n, rng) : jr::random_in_tree(n, rng);
    Digraph t2 = seed & 2 ? jr::random_out_tree(n, rng) : jr::random_in_tree(n, rng);
    auto j = jr::build_two_trees(t1, t2);
    expect_join(j, t1, t2);
    const int l = clog2(n) + 1;
    EXPECT_LE(j.size(), static_cast<std::size_t>(4 * n * l * l));
  }
}

TEST(UnorientedTrees, Random) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 1 + rng.below(40);
    Digraph g1 = jr::random_unoriented_tree(n, rng);
    Digraph g2 = jr::random_unoriented_tree(n, rng);
    expect_join(jr::build_unoriented_trees(g1, g2), g1, g2);
  }
}

TEST(UnorientedTrees, RootedInputsUseOnePair) {
  jr::Rng rng(9);
  Digraph g1 = jr::random_in_tree(25, rng);
  Digraph g2 = jr::random_out_tree(25, rng);
  expect_join(jr::build_unoriented_trees(g1, g2), g1, g2);
}

TEST(Pathcover, DipathFirstGraphMatchesTwoPaths) {
  jr::Rng rng(6);
  Digraph p1 = jr::random_dipath(20, rng);
  Digraph p2 = jr::random_dipath(20, rng);
  expect_join(jr::build_pathcover(p1.with_kind(jr::Kind::kDigraph), p2), p1, p2);
}

TEST(Pathcover, AntichainIsReflexive) {
  jr::Rng rng(7);
  Digraph g1(10, {});
  Digraph p2 = jr::random_dipath(10, rng);
  auto rel = oracle::reach(jr::build_pathcover(g1, p2).graph, 10);
  for (Vertex a = 0; a < 10; ++a) {
    for (Vertex b = 0; b < 10; ++b) EXPECT_EQ(rel[a][b] != 0, a == b);
  }
}

TEST(Pathcover, RandomDagWithPathAndDag) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 1 + rng.below(40);
    Digraph g1 = jr::random_dag_with_cover(n, 6, 0.05, rng);
    Digraph p2 = jr::random_dipath(n, rng);
    Digraph g2 = jr::random_dag_with_cover(n, 5, 0.05, rng);
    expect_join(jr::build_pathcover(g1, p2), g1, p2);
    expect_join(jr::build_pathcover(g1, g2), g1, g2);
  }
}

TEST(Pathcover, CyclicInputThrows) {
  Digraph g(3, {{0, 1}, {1, 2}, {2, 0}});
  Digraph p(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(jr::build_pathcover(g, p), jr::Error);
}

TEST(Verify, DetectsDeletedAndSpuriousArcs) {
  Digraph p(4, {{0, 1}, {1, 2}, {2, 3}});
  auto j = jr::build_two_paths(p, p);
  EXPECT_TRUE(jr::verify_join_graph(j, p, p).ok);

  // Unique witness: drop every arc on some 0 -> 3 path one at a time until
  // the relation breaks, and check the report names a broken pair.
  bool saw_failure = false;
  for (std::size_t k = 0; k < j.graph.m(); ++k) {
    std::vector<jr::Arc> arcs(j.graph.arcs().begin(), j.graph.arcs().end());
    arcs.erase(arcs.begin() + k);
    jr::JoinGraph cut = j;
    cut.graph = Digraph(j.graph.n(), arcs);
    auto rep = jr::verify_join_graph(cut, p, p);
    auto want = oracle::reach(cut.graph, 4);
    auto full = oracle::join(p, p);
    if (want == full) {
      EXPECT_TRUE(rep.ok);
      continue;
    }
    saw_failure = true;
    ASSERT_FALSE(rep.ok);
    EXPECT_TRUE(full[rep.a][rep.b] && !want[rep.a][rep.b]);
  }
  EXPECT_TRUE(saw_failure);

  jr::JoinGraph extra = j;
  std::vector<jr::Arc> arcs(j.graph.arcs().begin(), j.graph.arcs().end());
  arcs.emplace_back(3, 0);
  extra.graph = Digraph(j.graph.n(), arcs);
  auto rep = jr::verify_join_graph(extra, p, p);
  ASSERT_FALSE(rep.ok);
  EXPECT_EQ(rep.a, 1);
  EXPECT_EQ(rep.b, 0);
  EXPECT_TRUE(rep.in_join);
}

TEST(JoinGraphIo, RoundTrip) {
  auto [p1, p2] = jr::gen_bitreversal(8);
  auto j = jr::build_two_paths(p1, p2);
  std::stringstream ss;
  jr::write_join_graph(ss, j);
  auto back = jr::read_join_graph(ss);
  EXPECT_EQ(back.original_count, j.original_count);
  EXPECT_EQ(back.graph, j.graph);
  EXPECT_EQ(back.steiner, j.steiner);
}

TEST(ExpandCondensed, CyclicPairRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 2 + rng.below(20);
    Digraph g1 = jr::random_digraph(n, 0.15, rng);
    Digraph g2 = jr::random_digraph(n, 0.15, rng);
    auto cp = jr::condense_pair(g1, g2);
    auto hat = jr::build_pathcover(cp.g1_hat, cp.g2_hat);
    expect_join(jr::expand_condensed(hat, cp), g1, g2);
  }
}

}  // namespace
