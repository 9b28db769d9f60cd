#pragma once

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "jr/graph.hpp"
#include "jr/tree.hpp"

namespace jr {

struct Point2 {
  int x1 = 0;
  int x2 = 0;
  Vertex payload = kNoVertex;
};

// Per-query instrumentation. `visits` counts structure entries examined,
// `probes` counts secondary structures searched. Indexes built from several
// structures also log the ids of the structures they searched.
struct QueryStats {
  std::size_t visits = 0;
  std::size_t probes = 0;
  std::vector<Vertex> probed;
};

inline constexpr int kCoordMin = std::numeric_limits<int>::min();
inline constexpr int kCoordMax = std::numeric_limits<int>::max();

// Cartesian tree: in-order by x1, min-heap on x2. With `multi_column` set,
// points sharing an x1 value form a column: the lowest point of the column
// is the tree node and the rest sit in an overflow list sorted by x2.
class CartesianTree {
 public:
  CartesianTree() = default;
  explicit CartesianTree(std::vector<Point2> points, bool multi_column = false);

  std::size_t size() const { return points_.size(); }
  Vertex column_count() const { return static_cast<Vertex>(col_x1_.size()); }

  // Points with lo <= x1 <= hi and x2 <= y_max.
  void report(int lo, int hi, int y_max, std::vector<Vertex>& out,
              QueryStats* stats = nullptr) const;
  // Points dominated by b: x1 <= b.x1 and x2 <= b.x2.
  std::vector<Vertex> dominance_report(const Point2& b,
                                       QueryStats* stats = nullptr) const;

  // Tree shape, by column index (columns are numbered in x1 order).
  Vertex root() const { return root_; }
  Vertex left(Vertex c) const { return left_[c]; }
  Vertex right(Vertex c) const { return right_[c]; }
  const Point2& column_point(Vertex c) const { return points_[col_head_[c]]; }
  // Column holding the minimum x2 among columns i..j, found as nca(i, j).
  Vertex range_min(Vertex i, Vertex j) const { return nca_.query(i, j); }

 private:
  // First column with x1 >= x, or column_count() if none.
  Vertex column_at_or_after(int x) const;

  std::vector<Point2> points_;        // sorted by (x1, x2)
  std::vector<int> col_x1_;
  std::vector<Vertex> col_head_;      // index into points_ of the column minimum
  std::vector<Vertex> col_end_;       // one past the column's last point
  std::vector<Vertex> left_, right_;
  Vertex root_ = kNoVertex;
  NcaIndex nca_;
  int base_ = 0;
  std::vector<Vertex> locate_;        // x - base_ -> first column with x1 >= x
};

struct HSegment {
  int x1_lo = 0;
  int x1_hi = 0;
  int x2 = 0;
  Vertex payload = kNoVertex;
};

// Horizontal segments against upward vertical rays. A ray from q hits the
// segments with x1_lo < q.x1 < x1_hi and x2 >= q.x2. Sweeping x1 builds a
// persistent balanced tree of active segments keyed by x2; every registered
// query point keeps the search path to its first hit, so reporting does no
// search.
class SegRayIndex {
 public:
  SegRayIndex() = default;
  SegRayIndex(const std::vector<HSegment>& segments,
              const std::vector<Point2>& queries);

  std::size_t query_count() const { return finger_off_.size() - 1; }

  // Query by registration index. Stops at segments with x2 > y_max.
  void report(std::size_t query, std::vector<Vertex>& out,
              QueryStats* stats = nullptr, int y_max = kCoordMax) const;
  // Query by point; throws Error if q was not registered.
  std::vector<Vertex> report(const Point2& q, QueryStats* stats = nullptr) const;

  // Number of stored finger entries (memory accounting).
  std::size_t finger_entries() const { return fingers_.size(); }

 private:
  struct Node {
    int key;
    Vertex seg;
    Vertex left;
    Vertex right;
    std::int8_t height;
  };

  Vertex make(int key, Vertex seg, Vertex l, Vertex r);
  Vertex balance(int key, Vertex seg, Vertex l, Vertex r);
  Vertex insert(Vertex t, int key, Vertex seg);
  Vertex erase(Vertex t, int key, Vertex seg);
  Vertex erase_min(Vertex t, Vertex& min_node);
  int height(Vertex t) const { return t == kNoVertex ? 0 : nodes_[t].height; }

  std::vector<Node> nodes_;
  std::vector<Vertex> payload_;
  std::vector<Vertex> fingers_;
  std::vector<std::size_t> finger_off_{0};
  std::unordered_map<std::uint64_t, std::size_t> by_point_;
};

// Axis-parallel rectangle with open sides.
struct Rect {
  int x1_lo = 0;
  int x1_hi = 0;
  int x2_lo = 0;
  int x2_hi = 0;
  Vertex payload = kNoVertex;
};

// Rectangles strictly containing a query point. Segment tree over x1 slabs;
// each node answers x2 stabbing with a Cartesian tree over its rectangles
// sorted by x2_lo. O(log^2 n + k) per query.
class EnclosureIndex {
 public:
  EnclosureIndex() = default;
  explicit EnclosureIndex(std::vector<Rect> rects);

  void report(const Point2& q, std::vector<Vertex>& out,
              QueryStats* stats = nullptr) const;
  std::vector<Vertex> report(const Point2& q, QueryStats* stats = nullptr) const;

 private:
  struct Slab {
    std::vector<int> lo2;     // sorted x2_lo of the node's rectangles
    CartesianTree by_hi;      // x1 = position in lo2 order, x2 = -x2_hi
  };
  void insert(std::size_t node, Vertex l, Vertex r, Vertex a, Vertex b,
              Vertex rect, std::vector<std::vector<Vertex>>& lists);

  std::vector<Rect> rects_;
  std::vector<int> coords_;   // distinct x1 endpoints
  Vertex elementary_ = 0;     // 2 * coords_.size() - 1 elementary x1 cells
  std::vector<Slab> slabs_;
};

// Two-level range tree with inclusive bounds. O(n log n) space,
// O(log^2 n + k) query.
class RangeTree2D {
 public:
  RangeTree2D() = default;
  explicit RangeTree2D(std::vector<Point2> points);

  void report(int x_lo, int x_hi, int y_lo, int y_hi, std::vector<Vertex>& out,
              QueryStats* stats = nullptr) const;
  std::vector<Vertex> report(int x_lo, int x_hi, int y_lo, int y_hi,
                             QueryStats* stats = nullptr) const;

 private:
  std::vector<Point2> points_;               // sorted by x1
  std::vector<std::vector<Vertex>> by_y_;    // segment tree nodes
  std::size_t leaves_ = 0;
};

}  // namespace jr
