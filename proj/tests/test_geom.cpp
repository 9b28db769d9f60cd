#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "jr/generate.hpp"
#include "jr/geom.hpp"

namespace {

using jr::Point2;
using jr::Vertex;

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Point2> random_points(jr::Rng& rng, Vertex n, int range) {
  std::vector<Point2> pts;
  for (Vertex i = 0; i < n; ++i) {
    pts.push_back({static_cast<int>(rng.below(range)), static_cast<int>(rng.below(range)), i});
  }
  return pts;
}

TEST(CartesianTree, HeapAndInorder) {
  jr::Rng rng(1);
  std::vector<Point2> pts;
  for (Vertex i = 0; i < 40; ++i) pts.push_back({static_cast<int>(i * 3), static_cast<int>(rng.below(1000)), i});
  jr::CartesianTree ct(pts);
  std::vector<Vertex> inorder;
  std::function<void(Vertex)> walk = [&](Vertex c) {
    if (c == jr::kNoVertex) return;
    if (ct.left(c) != jr::kNoVertex) {
      EXPECT_LE(ct.column_point(c).x2, ct.column_point(ct.left(c)).x2);
    }
    if (ct.right(c) != jr::kNoVertex) {
      EXPECT_LE(ct.column_point(c).x2, ct.column_point(ct.right(c)).x2);
    }
    walk(ct.left(c));
    inorder.push_back(c);
    walk(ct.right(c));
  };
  walk(ct.root());
  ASSERT_EQ(inorder.size(), 40u);
  for (Vertex i = 0; i < 40; ++i) EXPECT_EQ(inorder[i], i);
  for (Vertex i = 0; i < 40; i += 7) {
    for (Vertex j = i; j < 40; j += 5) {
      int best = ct.column_point(i).x2;
      for (Vertex k = i; k <= j; ++k) best = std::min(best, ct.column_point(k).x2);
      EXPECT_EQ(ct.column_point(ct.range_min(i, j)).x2, best);
    }
  }
}

TEST(CartesianTree, SortedInputsDegenerate) {
  std::vector<Point2> up, down;
  for (Vertex i = 0; i < 10; ++i) {
    up.push_back({static_cast<int>(i), static_cast<int>(i), i});
    down.push_back({static_cast<int>(i), static_cast<int>(-i), i});
  }
  jr::CartesianTree a(up);
  jr::CartesianTree b(down);
  EXPECT_EQ(a.root(), 0);
  EXPECT_EQ(b.root(), 9);
  EXPECT_EQ(a.left(a.root()), jr::kNoVertex);
  EXPECT_EQ(b.right(b.root()), jr::kNoVertex);
}

TEST(CartesianTree, EmptyAndDuplicateX1) {
  jr::CartesianTree empty(std::vector<Point2>{});
  EXPECT_TRUE(empty.dominance_report({5, 5, 0}).empty());
  EXPECT_THROW(jr::CartesianTree({{1, 1, 0}, {1, 2, 1}}), jr::Error);
  jr::CartesianTree multi({{1, 3, 0}, {1, 1, 1}, {2, 0, 2}}, true);
  EXPECT_EQ(multi.column_count(), 2);
  EXPECT_EQ(sorted(multi.dominance_report({1, 3, 9})), (std::vector<Vertex>{0, 1}));
}

TEST(CartesianTree, DominanceMatchesScanWithinVisitBound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    jr::Rng rng(seed);
    auto pts = random_points(rng, 1 + rng.below(200), 60);
    // Columns may repeat x1 but not whole points.
    for (auto& p : pts) p.x2 = p.x2 * 256 + p.payload;
    jr::CartesianTree ct(pts, true);
    for (int q = 0; q < 50; ++q) {
      Point2 b{static_cast<int>(rng.below(70)) - 5, static_cast<int>(rng.below(70 * 256)) - 5, 0};
      std::vector<Vertex> expect;
      for (const auto& p : pts) {
        if (p.x1 <= b.x1 && p.x2 <= b.x2) expect.push_back(p.payload);
      }
      jr::QueryStats st;
      auto got = sorted(ct.dominance_report(b, &st));
      EXPECT_EQ(got, expect);
      EXPECT_LE(st.visits, 3 * got.size() + 3);
    }
  }
}

TEST(CartesianTree, ThreeSidedReport) {
  jr::Rng rng(9);
  std::vector<Point2> pts;
  for (Vertex i = 0; i < 100; ++i) pts.push_back({static_cast<int>(2 * i), static_cast<int>(rng.below(50)), i});
  jr::CartesianTree ct(pts);
  for (int q = 0; q < 100; ++q) {
    int lo = static_cast<int>(rng.below(200));
    int hi = lo + static_cast<int>(rng.below(60));
    int y = static_cast<int>(rng.below(50));
    std::vector<Vertex> expect, got;
    for (const auto& p : pts) {
      if (lo <= p.x1 && p.x1 <= hi && p.x2 <= y) expect.push_back(p.payload);
    }
    ct.report(lo, hi, y, got);
    EXPECT_EQ(sorted(got), expect);
  }
}

TEST(SegRay, MatchesScan) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    jr::Rng rng(seed);
    std::vector<jr::HSegment> segs;
    Vertex m = 1 + rng.below(80);
    for (Vertex i = 0; i < m; ++i) {
      int a = static_cast<int>(rng.below(100));
      int b = a + 1 + static_cast<int>(rng.below(40));
      segs.push_back({a, b, static_cast<int>(rng.below(100)), i});
    }
    auto queries = random_points(rng, 60, 140);
    jr::SegRayIndex idx(segs, queries);
    ASSERT_EQ(idx.query_count(), queries.size());
    for (std::size_t q = 0; q < queries.size(); ++q) {
      const auto& p = queries[q];
      std::vector<Vertex> expect, got;
      for (const auto& s : segs) {
        if (s.x1_lo < p.x1 && p.x1 < s.x1_hi && s.x2 >= p.x2) expect.push_back(s.payload);
      }
      jr::QueryStats st;
      idx.report(q, got, &st);
      EXPECT_EQ(sorted(got), expect);
      EXPECT_LE(st.visits, 6 * (got.size() + 1));
      EXPECT_EQ(sorted(idx.report(p)), expect);
    }
  }
}

TEST(SegRay, UnregisteredPointThrows) {
  jr::SegRayIndex idx({{0, 10, 5, 0}}, {{3, 1, 0}});
  EXPECT_EQ(idx.report({3, 1, 0}), (std::vector<Vertex>{0}));
  EXPECT_THROW(idx.report({4, 1, 0}), jr::Error);
}

TEST(SegRay, HeightCap) {
  jr::SegRayIndex idx({{0, 10, 5, 0}, {0, 10, 8, 1}, {0, 10, 2, 2}}, {{3, 1, 0}});
  std::vector<Vertex> out;
  idx.report(0, out, nullptr, 6);
  EXPECT_EQ(sorted(out), (std::vector<Vertex>{0, 2}));
}

TEST(Enclosure, MatchesScan) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    jr::Rng rng(seed);
    std::vector<jr::Rect> rects;
    Vertex m = rng.below(100);
    for (Vertex i = 0; i < m; ++i) {
      int a = static_cast<int>(rng.below(60));
      int c = static_cast<int>(rng.below(60));
      rects.push_back({a, a + 1 + static_cast<int>(rng.below(30)), c,
                       c + 1 + static_cast<int>(rng.below(30)), i});
    }
    jr::EnclosureIndex idx(rects);
    for (const auto& p : random_points(rng, 80, 95)) {
      std::vector<Vertex> expect;
      for (const auto& r : rects) {
        if (r.x1_lo < p.x1 && p.x1 < r.x1_hi && r.x2_lo < p.x2 && p.x2 < r.x2_hi) {
          expect.push_back(r.payload);
        }
      }
      EXPECT_EQ(sorted(idx.report(p)), expect);
    }
  }
}

TEST(RangeTree, MatchesScan) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    jr::Rng rng(seed);
    auto pts = random_points(rng, rng.below(150), 50);
    jr::RangeTree2D rt(pts);
    for (int q = 0; q < 60; ++q) {
      int xl = static_cast<int>(rng.below(50)), xh = xl + static_cast<int>(rng.below(30));
      int yl = static_cast<int>(rng.below(50)), yh = yl + static_cast<int>(rng.below(30));
      std::vector<Vertex> expect;
      for (const auto& p : pts) {
        if (xl <= p.x1 && p.x1 <= xh && yl <= p.x2 && p.x2 <= yh) expect.push_back(p.payload);
      }
      EXPECT_EQ(sorted(rt.report(xl, xh, yl, yh)), expect);
    }
  }
}

}  // namespace
