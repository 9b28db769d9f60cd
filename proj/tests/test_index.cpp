#include <gtest/gtest.h>

#include "jr/explicit.hpp"
#include "jr/generate.hpp"
#include "jr/jr_index.hpp"
#include "jr/layers.hpp"
#include "jr/pieces.hpp"
#include "oracle.hpp"

namespace {

using jr::Digraph;
using jr::Vertex;

void expect_exact(const jr::JRIndex& idx, const Digraph& g1, const Digraph& g2) {
  auto rel = oracle::join(g1, g2);
  for (Vertex b = 0; b < g1.n(); ++b) {
    ASSERT_EQ(idx.query(b), oracle::column(rel, b)) << "b=" << b;
  }
}

Digraph chain(Vertex n) {
  std::vector<jr::Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) arcs.emplace_back(v, v + 1);
  return Digraph(n, arcs, jr::Kind::kPath);
}

TEST(IndexTwoPaths, IdenticalAndReversed) {
  jr::Rng rng(1);
  Digraph p = jr::random_dipath(20, rng);
  auto same = jr::index_two_paths(p, p);
  EXPECT_EQ(same.query(jr::dipath_order(p).back()).size(), 20u);
  auto rev = jr::index_two_paths(p, p.reversed());
  for (Vertex b = 0; b < 20; ++b) EXPECT_EQ(rev.query(b), std::vector<Vertex>{b});
}

TEST(IndexTwoPaths, BitReversalAndRandom) {
  auto [p1, p2] = jr::gen_bitreversal(16);
  expect_exact(jr::index_two_paths(p1, p2), p1, p2);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 1 + rng.below(64);
    Digraph a = seed % 2 ? jr::random_dipath(n, rng) : jr::random_unoriented_path(n, rng);
    Digraph b = seed % 3 ? jr::random_dipath(n, rng) : jr::random_unoriented_path(n, rng);
    auto idx = jr::index_two_paths(a, b);
    expect_exact(idx, a, b);
    if (seed % 2 && seed % 3) {
      for (Vertex v = 0; v < n; ++v) {
        jr::QueryStats st;
        auto k = idx.query(v, &st).size();
        EXPECT_LE(st.visits, 6 * k);
      }
    }
  }
}

TEST(IndexTreePath, ChainAndStar) {
  Digraph c = chain(10);
  expect_exact(jr::index_tree_path(c.with_kind(jr::Kind::kOutTree), c), c, c);
  // In-star into the centre 0, path ranks 0 last: all leaves reach the
  // centre in both graphs.
  std::vector<jr::Arc> star;
  for (Vertex v = 1; v < 8; ++v) star.emplace_back(v, 0);
  Digraph t(8, star, jr::Kind::kInTree);
  Digraph p = chain(8).reversed();
  auto idx = jr::index_tree_path(t, p);
  EXPECT_EQ(idx.query(0), (std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(IndexTreePath, RandomRootedAndUnoriented) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 1 + rng.below(48);
    Digraph t = seed % 3 == 0   ? jr::random_out_tree(n, rng)
                : seed % 3 == 1 ? jr::random_in_tree(n, rng)
                                : jr::random_unoriented_tree(n, rng);
    Digraph p = seed % 4 == 3 ? jr::random_unoriented_path(n, rng) : jr::random_dipath(n, rng);
    expect_exact(jr::index_tree_path(t, p), t, p);
    expect_exact(jr::index_tree_path(p, t), p, t);
  }
}

TEST(IndexTwoTrees, SameOutTreeIsAncestry) {
  jr::Rng rng(2);
  Digraph t = jr::random_out_tree(30, rng);
  expect_exact(jr::index_two_trees(t, t), t, t);
}

TEST(IndexTwoTrees, AllOrientationMixes) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 1 + rng.below(64);
    auto pick = [&](int k) {
      return k == 0 ? jr::random_out_tree(n, rng)
             : k == 1 ? jr::random_in_tree(n, rng)
                      : jr::random_unoriented_tree(n, rng);
    };
    Digraph a = pick(seed % 3);
    Digraph b = pick((seed / 3) % 3);
    expect_exact(jr::index_two_trees(a, b), a, b);
  }
}

TEST(IndexTwoTrees, UnorientedProbesOnlyNeighbouringLayers) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 2 + rng.below(60);
    Digraph a = jr::random_unoriented_tree(n, rng);
    Digraph b = jr::random_unoriented_tree(n, rng);
    auto idx = jr::index_two_trees(a, b);
    auto la = jr::layer_decompose(a, jr::lowest_source(a));
    auto lb = jr::layer_decompose(b, jr::lowest_source(b));
    const bool a_layered = jr::decompose_pieces(a).layered;
    const bool b_layered = jr::decompose_pieces(b).layered;
    for (Vertex v = 0; v < n; ++v) {
      jr::QueryStats st;
      idx.query(v, &st);
      EXPECT_LE(st.probed.size(), 4u);
      for (Vertex id : st.probed) {
        auto [p1, p2] = idx.describe_structure(id);
        if (a_layered) EXPECT_TRUE(p1 == la.iota[v] || p1 == la.iota[v] - 1);
        if (b_layered) EXPECT_TRUE(p2 == lb.iota[v] || p2 == lb.iota[v] - 1);
      }
    }
  }
}

TEST(IndexPathcover, SinglePathAndAntichain) {
  jr::Rng rng(3);
  Digraph p1 = jr::random_dipath(20, rng);
  Digraph p2 = jr::random_dipath(20, rng);
  expect_exact(jr::index_pathcover(p1.with_kind(jr::Kind::kDigraph), p2), p1, p2);
  Digraph empty(12, {});
  auto idx = jr::index_pathcover(empty, jr::random_dipath(12, rng));
  for (Vertex b = 0; b < 12; ++b) EXPECT_EQ(idx.query(b), std::vector<Vertex>{b});
}

TEST(IndexPathcover, AllSecondGraphShapes) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 1 + rng.below(40);
    Digraph g1 = jr::random_dag_with_cover(n, 5, 0.05, rng);
    Digraph g2 = seed % 4 == 0   ? jr::random_dipath(n, rng)
                 : seed % 4 == 1 ? jr::random_out_tree(n, rng)
                 : seed % 4 == 2 ? jr::random_in_tree(n, rng)
                                 : jr::random_dag_with_cover(n, 5, 0.05, rng);
    auto idx = jr::index_pathcover(g1, g2);
    auto rel = oracle::join(g1, g2);
    for (Vertex b = 0; b < n; ++b) {
      jr::QueryStats st;
      auto got = idx.query(b, &st);
      ASSERT_EQ(got, oracle::column(rel, b));
      EXPECT_LE(st.visits, 6 * got.size());
    }
  }
}

TEST(IndexPathcover, CyclicRejected) {
  Digraph g(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_THROW(jr::index_pathcover(g, chain(3)), jr::Error);
}

TEST(PlanarLabels, SingleArcAndDiamond) {
  Digraph arc(2, {{0, 1}}, std::vector<std::vector<Vertex>>{{1}, {}});
  auto l = jr::kameda_labels(arc);
  EXPECT_LT(l.l1[0], l.l1[1]);
  EXPECT_LT(l.l2[0], l.l2[1]);
  // s=0, a=1 left of b=2, t=3.
  Digraph diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                  std::vector<std::vector<Vertex>>{{1, 2}, {3}, {3}, {}});
  auto d = jr::kameda_labels(diamond);
  EXPECT_NE(d.l1[1] < d.l1[2], d.l2[1] < d.l2[2]);
}

TEST(PlanarLabels, RandomSeriesParallel) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    jr::Rng rng(seed);
    Digraph g = jr::series_parallel_st(2 + rng.below(100), rng);
    auto l = jr::kameda_labels(g);
    EXPECT_TRUE(jr::kameda_property_holds(g, l));
  }
}

TEST(PlanarLabels, BadEmbeddingRejected) {
  // The bad order lists the out-arcs of 1 right to left.
  std::vector<jr::Arc> arcs{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}};
  Digraph good(6, arcs, std::vector<std::vector<Vertex>>{{1, 2}, {3, 4}, {4}, {5}, {5}, {}});
  EXPECT_NO_THROW(jr::kameda_labels(good));
  Digraph bad(6, arcs, std::vector<std::vector<Vertex>>{{1, 2}, {4, 3}, {4}, {5}, {5}, {}});
  EXPECT_THROW(jr::kameda_labels(bad), jr::Error);
}

TEST(IndexPlanarSt, TopologicalAndRandom) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 2 + rng.below(80);
    Digraph g = jr::series_parallel_st(n, rng);
    auto topo = jr::topological_order(g);
    std::vector<jr::Arc> arcs;
    for (Vertex i = 0; i + 1 < n; ++i) arcs.emplace_back(topo[i], topo[i + 1]);
    Digraph p(n, arcs, jr::Kind::kPath);
    auto idx = jr::index_planar_st(g, p);
    auto reach = oracle::reach(g);
    for (Vertex b = 0; b < n; ++b) EXPECT_EQ(idx.query(b), oracle::column(reach, b));
    Digraph q = jr::random_dipath(n, rng);
    expect_exact(jr::index_planar_st(g, q), g, q);
  }
}

TEST(IndexHpd, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    jr::Rng rng(seed);
    Vertex n = 1 + rng.below(64);
    Digraph a = jr::random_out_tree(n, rng);
    Digraph b = seed % 2 ? jr::random_out_tree(n, rng) : jr::random_in_tree(n, rng);
    expect_exact(jr::index_hpd_two_trees(a, b), a, b);
    expect_exact(jr::index_hpd_two_trees(b, a), b, a);
  }
}

TEST(Index, QueryOutOfRangeThrows) {
  Digraph c = chain(5);
  auto idx = jr::index_two_paths(c, c);
  EXPECT_THROW(idx.query(5), jr::Error);
  EXPECT_THROW(idx.query(-1), jr::Error);
  EXPECT_EQ(idx.query(4), (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(Index, ClassNamesRoundTrip) {
  for (auto c : {jr::IndexClass::kTwoPaths, jr::IndexClass::kTreePath,
                 jr::IndexClass::kTwoTrees, jr::IndexClass::kPathcover,
                 jr::IndexClass::kPlanarSt, jr::IndexClass::kHpdTwoTrees}) {
    EXPECT_EQ(jr::parse_index_class(jr::index_class_name(c)), c);
  }
  EXPECT_THROW(jr::parse_index_class("lattice"), jr::Error);
}

}  // namespace
