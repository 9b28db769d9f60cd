#include "jr/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace jr {

namespace {

// Next non-empty line, or false at end of input.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Digraph read_graph(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw Error("graph file: missing header");
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  std::string kind_str;
  if (!(header >> n >> m >> kind_str) || n < 0 || m < 0) {
    throw Error("graph file: malformed header '" + line + "'");
  }
  const Kind kind = parse_kind(kind_str);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line)) throw Error("graph file: truncated arc list");
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v)) throw Error("graph file: malformed arc '" + line + "'");
    arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (kind != Kind::kPlanarSt) {
    return Digraph(static_cast<Vertex>(n), std::move(arcs), kind);
  }
  std::vector<std::vector<Vertex>> order(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (long long i = 0; i < n; ++i) {
    if (!next_line(in, line)) throw Error("graph file: truncated out-arc order");
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw Error("graph file: malformed out-arc order '" + line + "'");
    }
    long long v = -1;
    std::istringstream head(line.substr(0, colon));
    if (!(head >> v) || v < 0 || v >= n || seen[v]) {
      throw Error("graph file: bad vertex in out-arc order '" + line + "'");
    }
    seen[v] = 1;
    std::istringstream rest(line.substr(colon + 1));
    long long w;
    while (rest >> w) order[v].push_back(static_cast<Vertex>(w));
  }
  return Digraph(static_cast<Vertex>(n), std::move(arcs), std::move(order));
}

void write_graph(std::ostream& out, const Digraph& g) {
  out << g.n() << ' ' << g.m() << ' ' << kind_name(g.kind()) << '\n';
  for (const auto& [u, v] : g.arcs()) out << u << ' ' << v << '\n';
  if (g.kind() == Kind::kPlanarSt) {
    for (Vertex v = 0; v < g.n(); ++v) {
      out << v << ':';
      for (Vertex w : g.out_order()[v]) out << ' ' << w;
      out << '\n';
    }
  }
}

Digraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_graph(in);
}

void save_graph(const std::filesystem::path& path, const Digraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_graph(out, g);
}

}  // namespace jr
