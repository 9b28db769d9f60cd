#include "jr/cover.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

namespace jr {

namespace {

// Hopcroft-Karp over the split graph: left copy u, right copy v per arc.
class Matching {
 public:
  explicit Matching(const Digraph& g)
      : g_(g), match_l_(g.n(), kNoVertex), match_r_(g.n(), kNoVertex),
        dist_(g.n()) {}

  void run() {
    while (bfs()) {
      for (Vertex u = 0; u < g_.n(); ++u) {
        if (match_l_[u] == kNoVertex) dfs(u);
      }
    }
  }

  const std::vector<Vertex>& match_left() const { return match_l_; }
  const std::vector<Vertex>& match_right() const { return match_r_; }

 private:
  static constexpr Vertex kInf = std::numeric_limits<Vertex>::max();

  bool bfs() {
    std::queue<Vertex> q;
    for (Vertex u = 0; u < g_.n(); ++u) {
      dist_[u] = match_l_[u] == kNoVertex ? 0 : kInf;
      if (dist_[u] == 0) q.push(u);
    }
    bool found = false;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : g_.out(u)) {
        Vertex w = match_r_[v];
        if (w == kNoVertex) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  // Iterative layered DFS from a free left vertex.
  bool dfs(Vertex root) {
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      auto outs = g_.out(u);
      if (next == outs.size()) {
        dist_[u] = kInf;
        stack.pop_back();
        continue;
      }
      Vertex v = outs[next++];
      Vertex w = match_r_[v];
      if (w == kNoVertex) {
        // Flip the path held on the stack.
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          Vertex a = it->first;
          Vertex b = g_.out(a)[it->second - 1];
          match_l_[a] = b;
          match_r_[b] = a;
        }
        return true;
      }
      if (dist_[w] == dist_[u] + 1) stack.emplace_back(w, 0);
    }
    return false;
  }

  const Digraph& g_;
  std::vector<Vertex> match_l_, match_r_, dist_;
};

}  // namespace

PathCover cover_from_paths(Vertex n, std::vector<std::vector<Vertex>> paths) {
  PathCover pc;
  pc.path_of.assign(n, kNoVertex);
  pc.rank.assign(n, kNoVertex);
  for (Vertex i = 0; i < static_cast<Vertex>(paths.size()); ++i) {
    for (Vertex r = 0; r < static_cast<Vertex>(paths[i].size()); ++r) {
      Vertex v = paths[i][r];
      if (v < 0 || v >= n || pc.path_of[v] != kNoVertex) {
        throw Error("cover: paths must partition the vertex set");
      }
      pc.path_of[v] = i;
      pc.rank[v] = r;
    }
  }
  if (std::count(pc.path_of.begin(), pc.path_of.end(), kNoVertex) != 0) {
    throw Error("cover: vertex left uncovered");
  }
  pc.paths = std::move(paths);
  return pc;
}

PathCover min_path_cover(const Digraph& g) {
  if (!is_acyclic(g)) throw Error("min_path_cover: graph has a cycle");
  Matching m(g);
  m.run();
  std::vector<std::vector<Vertex>> paths;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (m.match_right()[v] != kNoVertex) continue;
    std::vector<Vertex> path;
    for (Vertex u = v; u != kNoVertex; u = m.match_left()[u]) path.push_back(u);
    paths.push_back(std::move(path));
  }
  return cover_from_paths(g.n(), std::move(paths));
}

PathCover greedy_path_cover(const Digraph& g) {
  auto order = topological_order(g);
  const Vertex n = g.n();
  std::vector<char> used(n, 0);
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> len(n), next(n);
  for (Vertex left = n; left > 0;) {
    // Longest path among unused vertices, by DP in reverse topological order.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex v = *it;
      if (used[v]) continue;
      len[v] = 1;
      next[v] = kNoVertex;
      for (Vertex w : g.out(v)) {
        if (!used[w] && len[w] + 1 > len[v]) {
          len[v] = len[w] + 1;
          next[v] = w;
        }
      }
    }
    Vertex best = kNoVertex;
    for (Vertex v : order) {
      if (!used[v] && (best == kNoVertex || len[v] > len[best])) best = v;
    }
    std::vector<Vertex> path;
    for (Vertex v = best; v != kNoVertex; v = next[v]) {
      path.push_back(v);
      used[v] = 1;
    }
    left -= static_cast<Vertex>(path.size());
    paths.push_back(std::move(path));
  }
  return cover_from_paths(n, std::move(paths));
}

bool is_valid_cover(const Digraph& g, const PathCover& pc) {
  std::vector<char> seen(g.n(), 0);
  for (const auto& path : pc.paths) {
    for (std::size_t r = 0; r < path.size(); ++r) {
      Vertex v = path[r];
      if (!g.contains(v) || seen[v]) return false;
      seen[v] = 1;
      if (r > 0 && !g.has_arc(path[r - 1], v)) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

FromRanks from_ranks(const Digraph& g, const PathCover& pc) {
  FromRanks f;
  f.n = g.n();
  f.kappa = pc.kappa();
  f.from.assign(static_cast<std::size_t>(f.n) * f.kappa, kNoVertex);
  for (Vertex v : topological_order(g)) {
    Vertex* row = f.from.data() + static_cast<std::size_t>(v) * f.kappa;
    row[pc.path_of[v]] = std::max(row[pc.path_of[v]], pc.rank[v]);
    for (Vertex w : g.out(v)) {
      Vertex* dst = f.from.data() + static_cast<std::size_t>(w) * f.kappa;
      for (Vertex i = 0; i < f.kappa; ++i) dst[i] = std::max(dst[i], row[i]);
    }
  }
  return f;
}

void write_cover(std::ostream& out, const PathCover& pc) {
  out << pc.kappa() << '\n';
  for (const auto& path : pc.paths) {
    for (std::size_t r = 0; r < path.size(); ++r) {
      out << (r ? " " : "") << path[r];
    }
    out << '\n';
  }
}

PathCover read_cover(std::istream& in, Vertex n) {
  long long kappa = -1;
  if (!(in >> kappa) || kappa < 0) throw Error("cover file: malformed kappa");
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<Vertex>> paths;
  while (static_cast<long long>(paths.size()) < kappa && std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<Vertex> path;
    long long v;
    while (row >> v) path.push_back(static_cast<Vertex>(v));
    if (path.empty()) throw Error("cover file: empty path line");
    paths.push_back(std::move(path));
  }
  if (static_cast<long long>(paths.size()) != kappa) {
    throw Error("cover file: expected " + std::to_string(kappa) + " paths");
  }
  return cover_from_paths(n, std::move(paths));
}

}  // namespace jr
