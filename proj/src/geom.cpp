#include "jr/geom.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace jr {

// ---------------------------------------------------------------------------
// CartesianTree

CartesianTree::CartesianTree(std::vector<Point2> points, bool multi_column)
    : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(), [](const Point2& a, const Point2& b) {
    return std::tie(a.x1, a.x2) < std::tie(b.x1, b.x2);
  });
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0 && points_[i].x1 == points_[i - 1].x1) {
      if (points_[i].x2 == points_[i - 1].x2) {
        throw Error("cartesian tree: duplicate point");
      }
      if (!multi_column) throw Error("cartesian tree: duplicate x1 coordinate");
      continue;
    }
    if (!col_head_.empty()) col_end_.push_back(static_cast<Vertex>(i));
    col_x1_.push_back(points_[i].x1);
    col_head_.push_back(static_cast<Vertex>(i));
  }
  if (!col_head_.empty()) col_end_.push_back(static_cast<Vertex>(points_.size()));

  const Vertex cols = column_count();
  left_.assign(cols, kNoVertex);
  right_.assign(cols, kNoVertex);
  std::vector<Vertex> parent(cols, kNoVertex);
  std::vector<Vertex> stack;
  for (Vertex c = 0; c < cols; ++c) {
    const int key = column_point(c).x2;
    Vertex last = kNoVertex;
    while (!stack.empty() && column_point(stack.back()).x2 > key) {
      last = stack.back();
      stack.pop_back();
    }
    if (last != kNoVertex) {
      left_[c] = last;
      parent[last] = c;
    }
    if (!stack.empty()) {
      right_[stack.back()] = c;
      parent[c] = stack.back();
    }
    stack.push_back(c);
  }
  if (cols == 0) return;
  root_ = stack.front();
  nca_ = NcaIndex(rooted_tree_from_parents(std::move(parent), true));

  // Direct-address column lookup when the x1 span is proportional to the
  // point count; otherwise fall back to binary search.
  const long long span =
      static_cast<long long>(col_x1_.back()) - col_x1_.front() + 1;
  if (span <= 8 * static_cast<long long>(points_.size()) + 64) {
    base_ = col_x1_.front();
    locate_.assign(static_cast<std::size_t>(span), 0);
    Vertex c = 0;
    for (long long off = 0; off < span; ++off) {
      while (c < cols && col_x1_[c] < base_ + off) ++c;
      locate_[off] = c;
    }
  }
}

Vertex CartesianTree::column_at_or_after(int x) const {
  if (col_x1_.empty() || x <= col_x1_.front()) return 0;
  if (x > col_x1_.back()) return column_count();
  if (!locate_.empty()) return locate_[static_cast<long long>(x) - base_];
  return static_cast<Vertex>(
      std::lower_bound(col_x1_.begin(), col_x1_.end(), x) - col_x1_.begin());
}

void CartesianTree::report(int lo, int hi, int y_max, std::vector<Vertex>& out,
                           QueryStats* stats) const {
  if (col_x1_.empty() || lo > hi) return;
  const Vertex i = column_at_or_after(lo);
  const Vertex j =
      hi >= col_x1_.back() ? column_count() - 1 : column_at_or_after(hi + 1) - 1;
  std::size_t visits = 0;
  // Small explicit stack of column ranges.
  std::vector<std::pair<Vertex, Vertex>> ranges;
  if (i <= j) ranges.emplace_back(i, j);
  while (!ranges.empty()) {
    auto [a, b] = ranges.back();
    ranges.pop_back();
    const Vertex c = nca_.query(a, b);
    ++visits;
    if (points_[col_head_[c]].x2 > y_max) continue;
    out.push_back(points_[col_head_[c]].payload);
    for (Vertex k = col_head_[c] + 1; k < col_end_[c]; ++k) {
      ++visits;
      if (points_[k].x2 > y_max) break;
      out.push_back(points_[k].payload);
    }
    if (a < c) ranges.emplace_back(a, c - 1);
    if (c < b) ranges.emplace_back(c + 1, b);
  }
  if (stats) stats->visits += visits;
}

std::vector<Vertex> CartesianTree::dominance_report(const Point2& b,
                                                    QueryStats* stats) const {
  std::vector<Vertex> out;
  report(kCoordMin, b.x1, b.x2, out, stats);
  return out;
}

// ---------------------------------------------------------------------------
// SegRayIndex

namespace {

std::uint64_t point_key(int x1, int x2) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x1)) << 32) |
         static_cast<std::uint32_t>(x2);
}

}  // namespace

Vertex SegRayIndex::make(int key, Vertex seg, Vertex l, Vertex r) {
  const int h = 1 + std::max(height(l), height(r));
  nodes_.push_back({key, seg, l, r, static_cast<std::int8_t>(h)});
  return static_cast<Vertex>(nodes_.size() - 1);
}

Vertex SegRayIndex::balance(int key, Vertex seg, Vertex l, Vertex r) {
  const int hl = height(l);
  const int hr = height(r);
  if (hl > hr + 1) {
    const Node left = nodes_[l];
    if (height(left.left) >= height(left.right)) {
      return make(left.key, left.seg, left.left, make(key, seg, left.right, r));
    }
    const Node lr = nodes_[left.right];
    Vertex a = make(left.key, left.seg, left.left, lr.left);
    Vertex b = make(key, seg, lr.right, r);
    return make(lr.key, lr.seg, a, b);
  }
  if (hr > hl + 1) {
    const Node right = nodes_[r];
    if (height(right.right) >= height(right.left)) {
      return make(right.key, right.seg, make(key, seg, l, right.left), right.right);
    }
    const Node rl = nodes_[right.left];
    Vertex a = make(key, seg, l, rl.left);
    Vertex b = make(right.key, right.seg, rl.right, right.right);
    return make(rl.key, rl.seg, a, b);
  }
  return make(key, seg, l, r);
}

Vertex SegRayIndex::insert(Vertex t, int key, Vertex seg) {
  if (t == kNoVertex) return make(key, seg, kNoVertex, kNoVertex);
  const Node node = nodes_[t];
  if (std::tie(key, seg) < std::tie(node.key, node.seg)) {
    return balance(node.key, node.seg, insert(node.left, key, seg), node.right);
  }
  return balance(node.key, node.seg, node.left, insert(node.right, key, seg));
}

Vertex SegRayIndex::erase_min(Vertex t, Vertex& min_node) {
  const Node node = nodes_[t];
  if (node.left == kNoVertex) {
    min_node = t;
    return node.right;
  }
  Vertex l = erase_min(node.left, min_node);
  return balance(node.key, node.seg, l, node.right);
}

Vertex SegRayIndex::erase(Vertex t, int key, Vertex seg) {
  if (t == kNoVertex) throw Error("segment index: erase of absent segment");
  const Node node = nodes_[t];
  if (std::tie(key, seg) < std::tie(node.key, node.seg)) {
    return balance(node.key, node.seg, erase(node.left, key, seg), node.right);
  }
  if (std::tie(node.key, node.seg) < std::tie(key, seg)) {
    return balance(node.key, node.seg, node.left, erase(node.right, key, seg));
  }
  if (node.left == kNoVertex) return node.right;
  if (node.right == kNoVertex) return node.left;
  Vertex m = kNoVertex;
  Vertex r = erase_min(node.right, m);
  const Node min = nodes_[m];
  return balance(min.key, min.seg, node.left, r);
}

SegRayIndex::SegRayIndex(const std::vector<HSegment>& segments,
                         const std::vector<Point2>& queries) {
  const Vertex ns = static_cast<Vertex>(segments.size());
  payload_.resize(ns);
  std::vector<Vertex> by_lo;
  std::vector<Vertex> by_hi;
  for (Vertex i = 0; i < ns; ++i) {
    payload_[i] = segments[i].payload;
    if (segments[i].x1_lo >= segments[i].x1_hi) continue;  // empty interior
    by_lo.push_back(i);
    by_hi.push_back(i);
  }
  std::sort(by_lo.begin(), by_lo.end(), [&](Vertex a, Vertex b) {
    return segments[a].x1_lo < segments[b].x1_lo;
  });
  std::sort(by_hi.begin(), by_hi.end(), [&](Vertex a, Vertex b) {
    return segments[a].x1_hi < segments[b].x1_hi;
  });
  std::vector<std::size_t> by_x(queries.size());
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
    return queries[a].x1 < queries[b].x1;
  });

  // Sweep: at coordinate c, drop segments ending at c, answer queries at c,
  // then add segments starting at c. The version seen by a query at c holds
  // exactly the segments with lo < c < hi.
  std::vector<std::vector<Vertex>> finger(queries.size());
  Vertex root = kNoVertex;
  std::size_t il = 0, ih = 0, iq = 0;
  while (iq < by_x.size()) {
    long long c = queries[by_x[iq]].x1;
    if (il < by_lo.size()) c = std::min<long long>(c, segments[by_lo[il]].x1_lo);
    if (ih < by_hi.size()) c = std::min<long long>(c, segments[by_hi[ih]].x1_hi);
    for (; ih < by_hi.size() && segments[by_hi[ih]].x1_hi == c; ++ih) {
      root = erase(root, segments[by_hi[ih]].x2, by_hi[ih]);
    }
    for (; iq < by_x.size() && queries[by_x[iq]].x1 == c; ++iq) {
      const Point2& q = queries[by_x[iq]];
      auto& path = finger[by_x[iq]];
      for (Vertex t = root; t != kNoVertex;) {
        if (nodes_[t].key >= q.x2) {
          path.push_back(t);
          t = nodes_[t].left;
        } else {
          t = nodes_[t].right;
        }
      }
    }
    for (; il < by_lo.size() && segments[by_lo[il]].x1_lo == c; ++il) {
      root = insert(root, segments[by_lo[il]].x2, by_lo[il]);
    }
  }
  for (std::size_t q = 0; q < queries.size(); ++q) {
    fingers_.insert(fingers_.end(), finger[q].begin(), finger[q].end());
    finger_off_.push_back(fingers_.size());
    by_point_.emplace(point_key(queries[q].x1, queries[q].x2), q);
  }
}

void SegRayIndex::report(std::size_t query, std::vector<Vertex>& out,
                         QueryStats* stats, int y_max) const {
  if (query + 1 >= finger_off_.size()) {
    throw Error("segment index: unregistered query point");
  }
  std::size_t idx = finger_off_[query + 1];
  const std::size_t begin = finger_off_[query];
  std::size_t visits = 0;
  // Nodes pushed while walking right subtrees precede every remaining
  // finger entry in key order.
  std::vector<Vertex> local;
  while (true) {
    Vertex u;
    if (!local.empty()) {
      u = local.back();
      local.pop_back();
    } else if (idx > begin) {
      u = fingers_[--idx];
      ++visits;
    } else {
      break;
    }
    const Node& node = nodes_[u];
    if (node.key > y_max) break;
    out.push_back(payload_[node.seg]);
    for (Vertex v = node.right; v != kNoVertex; v = nodes_[v].left) {
      local.push_back(v);
      ++visits;
    }
  }
  if (stats) stats->visits += visits;
}

std::vector<Vertex> SegRayIndex::report(const Point2& q, QueryStats* stats) const {
  auto it = by_point_.find(point_key(q.x1, q.x2));
  if (it == by_point_.end()) {
    throw Error("segment index: unregistered query point");
  }
  std::vector<Vertex> out;
  report(it->second, out, stats);
  return out;
}

// ---------------------------------------------------------------------------
// EnclosureIndex

EnclosureIndex::EnclosureIndex(std::vector<Rect> rects) : rects_(std::move(rects)) {
  for (const Rect& r : rects_) {
    coords_.push_back(r.x1_lo);
    coords_.push_back(r.x1_hi);
  }
  std::sort(coords_.begin(), coords_.end());
  coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
  if (coords_.empty()) return;
  elementary_ = static_cast<Vertex>(2 * coords_.size() - 1);
  std::vector<std::vector<Vertex>> lists(4 * static_cast<std::size_t>(elementary_));
  auto index_of = [&](int x) {
    return static_cast<Vertex>(
        std::lower_bound(coords_.begin(), coords_.end(), x) - coords_.begin());
  };
  for (Vertex i = 0; i < static_cast<Vertex>(rects_.size()); ++i) {
    const Rect& r = rects_[i];
    if (r.x1_lo >= r.x1_hi || r.x2_lo >= r.x2_hi) continue;
    Vertex a = 2 * index_of(r.x1_lo) + 1;
    Vertex b = 2 * index_of(r.x1_hi) - 1;
    insert(1, 0, elementary_ - 1, a, b, i, lists);
  }
  slabs_.resize(lists.size());
  for (std::size_t node = 0; node < lists.size(); ++node) {
    auto& list = lists[node];
    if (list.empty()) continue;
    std::sort(list.begin(), list.end(), [&](Vertex a, Vertex b) {
      return rects_[a].x2_lo < rects_[b].x2_lo;
    });
    Slab& slab = slabs_[node];
    std::vector<Point2> pts;
    for (std::size_t k = 0; k < list.size(); ++k) {
      slab.lo2.push_back(rects_[list[k]].x2_lo);
      pts.push_back({static_cast<int>(k), -rects_[list[k]].x2_hi,
                     rects_[list[k]].payload});
    }
    slab.by_hi = CartesianTree(std::move(pts));
  }
}

void EnclosureIndex::insert(std::size_t node, Vertex l, Vertex r, Vertex a,
                            Vertex b, Vertex rect,
                            std::vector<std::vector<Vertex>>& lists) {
  if (b < l || r < a) return;
  if (a <= l && r <= b) {
    lists[node].push_back(rect);
    return;
  }
  const Vertex mid = l + (r - l) / 2;
  insert(2 * node, l, mid, a, b, rect, lists);
  insert(2 * node + 1, mid + 1, r, a, b, rect, lists);
}

void EnclosureIndex::report(const Point2& q, std::vector<Vertex>& out,
                            QueryStats* stats) const {
  if (coords_.empty() || q.x1 <= coords_.front() || q.x1 >= coords_.back()) return;
  auto it = std::lower_bound(coords_.begin(), coords_.end(), q.x1);
  const Vertex i = static_cast<Vertex>(it - coords_.begin());
  const Vertex cell = *it == q.x1 ? 2 * i : 2 * i - 1;
  if (q.x2 == kCoordMax) return;
  std::size_t node = 1;
  Vertex l = 0;
  Vertex r = elementary_ - 1;
  while (true) {
    const Slab& slab = slabs_[node];
    if (!slab.lo2.empty()) {
      if (stats) ++stats->probes;
      const int p = static_cast<int>(
          std::lower_bound(slab.lo2.begin(), slab.lo2.end(), q.x2) -
          slab.lo2.begin());
      slab.by_hi.report(0, p - 1, -(q.x2 + 1), out, stats);
    }
    if (l == r) break;
    const Vertex mid = l + (r - l) / 2;
    if (cell <= mid) {
      node = 2 * node;
      r = mid;
    } else {
      node = 2 * node + 1;
      l = mid + 1;
    }
  }
}

std::vector<Vertex> EnclosureIndex::report(const Point2& q, QueryStats* stats) const {
  std::vector<Vertex> out;
  report(q, out, stats);
  return out;
}

// ---------------------------------------------------------------------------
// RangeTree2D

RangeTree2D::RangeTree2D(std::vector<Point2> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(), [](const Point2& a, const Point2& b) {
    return std::tie(a.x1, a.x2) < std::tie(b.x1, b.x2);
  });
  leaves_ = 1;
  while (leaves_ < points_.size()) leaves_ *= 2;
  by_y_.resize(2 * leaves_);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    by_y_[leaves_ + i] = {static_cast<Vertex>(i)};
  }
  auto y_less = [&](Vertex a, Vertex b) { return points_[a].x2 < points_[b].x2; };
  for (std::size_t node = leaves_ - 1; node >= 1; --node) {
    const auto& l = by_y_[2 * node];
    const auto& r = by_y_[2 * node + 1];
    by_y_[node].resize(l.size() + r.size());
    std::merge(l.begin(), l.end(), r.begin(), r.end(), by_y_[node].begin(), y_less);
  }
}

void RangeTree2D::report(int x_lo, int x_hi, int y_lo, int y_hi,
                         std::vector<Vertex>& out, QueryStats* stats) const {
  if (x_lo > x_hi || y_lo > y_hi) throw Error("range query: malformed rectangle");
  auto x_first = [&](int x) {
    return static_cast<std::size_t>(
        std::lower_bound(points_.begin(), points_.end(), x,
                         [](const Point2& p, int v) { return p.x1 < v; }) -
        points_.begin());
  };
  std::size_t l = x_first(x_lo) + leaves_;
  std::size_t r =
      (x_hi == kCoordMax ? points_.size() : x_first(x_hi + 1)) + leaves_;
  auto scan = [&](std::size_t node) {
    const auto& list = by_y_[node];
    if (stats) ++stats->probes;
    auto it = std::lower_bound(list.begin(), list.end(), y_lo, [&](Vertex p, int v) {
      return points_[p].x2 < v;
    });
    for (; it != list.end(); ++it) {
      if (stats) ++stats->visits;
      if (points_[*it].x2 > y_hi) break;
      out.push_back(points_[*it].payload);
    }
  };
  for (; l < r; l /= 2, r /= 2) {
    if (l & 1) scan(l++);
    if (r & 1) scan(--r);
  }
}

std::vector<Vertex> RangeTree2D::report(int x_lo, int x_hi, int y_lo, int y_hi,
                                        QueryStats* stats) const {
  std::vector<Vertex> out;
  report(x_lo, x_hi, y_lo, y_hi, out, stats);
  return out;
}

}  // namespace jr
