#include "jr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "jr/condense.hpp"
#include "jr/explicit.hpp"
#include "jr/generate.hpp"
#include "jr/graph_io.hpp"
#include "jr/jr_index.hpp"
#include "jr/minimal.hpp"

namespace jr {
namespace {

bool is_rooted(const Digraph& g) {
  if (!is_undirected_tree(g)) return false;
  bool out_ok = true, in_ok = true;
  for (Vertex v = 0; v < g.n(); ++v) {
    out_ok = out_ok && g.in_degree(v) <= 1;
    in_ok = in_ok && g.out_degree(v) <= 1;
  }
  return out_ok || in_ok;
}

bool is_dipath_graph(const Digraph& g) {
  if (!is_undirected_path(g)) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.in_degree(v) > 1 || g.out_degree(v) > 1) return false;
  }
  return true;
}

enum class ExplicitClass { kTwoPaths, kTreePath, kTwoTrees, kUnorientedTrees, kPathcover, kMinimal };

const std::vector<std::pair<std::string, ExplicitClass>> kExplicitNames = {
    {"two-paths", ExplicitClass::kTwoPaths},
    {"tree-path", ExplicitClass::kTreePath},
    {"two-trees", ExplicitClass::kTwoTrees},
    {"unoriented-trees", ExplicitClass::kUnorientedTrees},
    {"pathcover", ExplicitClass::kPathcover},
    {"minimal", ExplicitClass::kMinimal},
};

ExplicitClass parse_explicit_class(const std::string& name) {
  for (const auto& [key, cls] : kExplicitNames) {
    if (key == name) return cls;
  }
  throw Error("unknown explicit class: " + name);
}

ExplicitClass detect_explicit(const Digraph& g1, const Digraph& g2) {
  const bool p1 = is_undirected_path(g1), p2 = is_undirected_path(g2);
  const bool t1 = is_undirected_tree(g1), t2 = is_undirected_tree(g2);
  if (p1 && p2) return ExplicitClass::kTwoPaths;
  if (t1 && t2) {
    if ((p1 && is_rooted(g2)) || (p2 && is_rooted(g1))) return ExplicitClass::kTreePath;
    if (is_rooted(g1) && is_rooted(g2)) return ExplicitClass::kTwoTrees;
    return ExplicitClass::kUnorientedTrees;
  }
  return ExplicitClass::kPathcover;
}

IndexClass detect_index(const Digraph& g1, const Digraph& g2) {
  const bool p1 = is_undirected_path(g1), p2 = is_undirected_path(g2);
  const bool t1 = is_undirected_tree(g1), t2 = is_undirected_tree(g2);
  if (p1 && p2) return IndexClass::kTwoPaths;
  if (t1 && t2) return p1 || p2 ? IndexClass::kTreePath : IndexClass::kTwoTrees;
  if (g1.kind() == Kind::kPlanarSt && is_dipath_graph(g2)) {
    throw Error("class is ambiguous (planar-st or pathcover); pass --class");
  }
  return IndexClass::kPathcover;
}

JoinGraph build_explicit(ExplicitClass cls, const Digraph& g1, const Digraph& g2) {
  if (g1.n() != g2.n()) throw Error("vertex count mismatch");
  switch (cls) {
    case ExplicitClass::kTwoPaths:
      return build_two_paths(g1, g2);
    case ExplicitClass::kTreePath:
      return build_tree_path(g1, g2);
    case ExplicitClass::kTwoTrees:
      return build_two_trees(g1, g2);
    case ExplicitClass::kUnorientedTrees:
      return build_unoriented_trees(g1, g2);
    case ExplicitClass::kMinimal:
      return {minimal_restricted_join(g1, g2), g1.n(), {}};
    case ExplicitClass::kPathcover:
      break;
  }
  if (is_acyclic(g1) && is_acyclic(g2)) return build_pathcover(g1, g2);
  auto cp = condense_pair(g1, g2);
  return expand_condensed(build_pathcover(cp.g1_hat, cp.g2_hat), cp);
}

// Index over the condensed pair when an input has cycles.
class QuerySession {
 public:
  QuerySession(IndexClass cls, const Digraph& g1, const Digraph& g2) {
    if (g1.n() != g2.n()) throw Error("vertex count mismatch");
    if (cls == IndexClass::kPathcover && !(is_acyclic(g1) && is_acyclic(g2))) {
      cp_ = condense_pair(g1, g2);
      index_ = build_index(cls, cp_->g1_hat, cp_->g2_hat);
    } else {
      index_ = build_index(cls, g1, g2);
    }
    n_ = g1.n();
  }

  std::vector<Vertex> query(Vertex b) const {
    if (b < 0 || b >= n_) throw Error("query vertex out of range");
    if (!cp_) return index_.query(b);
    std::vector<Vertex> out;
    for (Vertex s : index_.query(cp_->sub_of[b])) {
      out.insert(out.end(), cp_->members[s].begin(), cp_->members[s].end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const JRIndex& index() const { return index_; }
  bool condensed() const { return cp_.has_value(); }

 private:
  JRIndex index_;
  std::optional<CondensedPair> cp_;
  Vertex n_ = 0;
};

int ceil_log2(Vertex n) {
  int l = 0;
  while ((Vertex{1} << l) < n) ++l;
  return std::max(l, 1);
}

double ratio_log(std::size_t size, Vertex n) {
  return static_cast<double>(size) / (static_cast<double>(n) * ceil_log2(n));
}

double ratio_log2(std::size_t size, Vertex n) {
  double l = ceil_log2(n);
  return static_cast<double>(size) / (static_cast<double>(n) * l * l);
}

struct BenchRow {
  std::string instance;
  Vertex n;
  JoinGraph j;
  double ms;
  bool squared;
};

template <class F>
BenchRow timed(std::string name, Vertex n, bool squared, F&& build) {
  auto t0 = std::chrono::steady_clock::now();
  JoinGraph j = build();
  auto t1 = std::chrono::steady_clock::now();
  return {std::move(name), n, std::move(j),
          std::chrono::duration<double, std::milli>(t1 - t0).count(), squared};
}

void run_bench(const std::string& suite, Vertex max_n, std::uint64_t seed, std::ostream& out) {
  if (suite != "paths" && suite != "trees" && suite != "pathcover") {
    throw Error("unknown bench suite: " + suite);
  }
  out << "suite\tinstance\tn\tsteiner\tarcs\tsize\tnorm\tratio\tbuild_ms\n";
  for (Vertex n = 256; n <= max_n; n *= 2) {
    Rng rng(seed + static_cast<std::uint64_t>(n));
    std::vector<BenchRow> rows;
    if (suite == "paths") {
      rows.push_back(timed("bitrev", n, false, [&] {
        auto pair = gen_bitreversal(n);
        return build_two_paths(pair.first, pair.second);
      }));
      Digraph a = random_dipath(n, rng);
      Digraph b = random_dipath(n, rng);
      rows.push_back(timed("random-dipaths", n, false, [&] { return build_two_paths(a, b); }));
    } else if (suite == "trees") {
      Digraph t = random_out_tree(n, rng);
      Digraph p = random_dipath(n, rng);
      rows.push_back(timed("out-tree+dipath", n, false, [&] { return build_tree_path(t, p); }));
      Digraph u = random_in_tree(n, rng);
      rows.push_back(timed("out-tree+in-tree", n, true, [&] { return build_two_trees(t, u); }));
    } else {
      Digraph g = random_dag_with_cover(n, 4, 4.0 / n, rng);
      Digraph p = random_dipath(n, rng);
      rows.push_back(timed("dag4+dipath", n, false, [&] { return build_pathcover(g, p); }));
      Digraph h = random_dag_with_cover(n, 4, 4.0 / n, rng);
      rows.push_back(timed("dag4+dag4", n, true, [&] { return build_pathcover(g, h); }));
    }
    for (const auto& r : rows) {
      const std::size_t size = r.j.size();
      out << suite << '\t' << r.instance << '\t' << r.n << '\t' << r.j.steiner_count() << '\t'
          << r.j.graph.m() << '\t' << size << '\t' << (r.squared ? "nlog2n" : "nlogn") << '\t'
          << std::fixed << std::setprecision(3)
          << (r.squared ? ratio_log2(size, r.n) : ratio_log(size, r.n)) << '\t'
          << std::setprecision(1) << r.ms << '\n';
      out.unsetf(std::ios::floatfield);
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"join-reachability graphs and indexes", "jr"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate instance graphs");
  std::string gen_kind;
  Vertex gen_n = 0;
  std::uint64_t gen_seed = 0;
  double gen_p = 0.1;
  std::vector<std::string> gen_out;
  gen->add_option("--kind", gen_kind,
                  "path | utree-random | out-tree | in-tree | dag-gnp | bitrev | sp-st")
      ->required();
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--p", gen_p, "arc probability for dag-gnp");
  gen->add_option("-o", gen_out, "one or two output files")->required()->expected(1, 2);

  auto* build = app.add_subcommand("build", "build an explicit join graph or an index");
  std::string build_mode = "explicit", build_class, build_out;
  std::string g1_path, g2_path;
  build->add_option("--mode", build_mode)->check(CLI::IsMember({"explicit", "index"}));
  build->add_option("--class", build_class);
  build->add_option("G1", g1_path)->required();
  build->add_option("G2", g2_path)->required();
  build->add_option("-o", build_out, "output join graph (default stdout)");

  auto* query = app.add_subcommand("query", "list every a with a ~> b in both graphs");
  std::string query_class;
  Vertex query_b = 0;
  query->add_option("--class", query_class);
  query->add_option("G1", g1_path)->required();
  query->add_option("G2", g2_path)->required();
  query->add_option("-b", query_b)->required();

  auto* verify = app.add_subcommand("verify", "check a join graph against the oracle");
  std::string j_path;
  verify->add_option("J", j_path)->required();
  verify->add_option("G1", g1_path)->required();
  verify->add_option("G2", g2_path)->required();

  auto* stats = app.add_subcommand("stats", "size summary of a join graph");
  stats->add_option("J", j_path)->required();

  auto* bench = app.add_subcommand("bench", "size and time sweep");
  std::string bench_suite;
  Vertex bench_max = 16384;
  std::uint64_t bench_seed = 1;
  bench->add_option("--suite", bench_suite)->required()->check(
      CLI::IsMember({"paths", "trees", "pathcover"}));
  bench->add_option("--max-n", bench_max);
  bench->add_option("--seed", bench_seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*gen) {
      InstanceSpec spec{parse_gen_kind(gen_kind), gen_n, gen_seed, gen_p};
      auto graphs = generate(spec, static_cast<int>(gen_out.size()));
      for (std::size_t i = 0; i < gen_out.size(); ++i) save_graph(gen_out[i], graphs[i]);
      return kExitOk;
    }
    if (*build) {
      Digraph g1 = load_graph(g1_path);
      Digraph g2 = load_graph(g2_path);
      if (build_mode == "explicit") {
        ExplicitClass cls = build_class.empty() ? detect_explicit(g1, g2)
                                                : parse_explicit_class(build_class);
        JoinGraph j = build_explicit(cls, g1, g2);
        if (build_out.empty()) {
          write_join_graph(out, j);
        } else {
          save_join_graph(build_out, j);
        }
        return kExitOk;
      }
      if (!build_out.empty()) throw Error("indexes are in-memory only; -o applies to explicit mode");
      IndexClass cls = build_class.empty() ? detect_index(g1, g2) : parse_index_class(build_class);
      QuerySession session(cls, g1, g2);
      out << "class\t" << index_class_name(session.index().variant()) << '\n'
          << "n\t" << g1.n() << '\n'
          << "structures\t" << session.index().structure_count() << '\n'
          << "condensed\t" << (session.condensed() ? "yes" : "no") << '\n';
      return kExitOk;
    }
    if (*query) {
      Digraph g1 = load_graph(g1_path);
      Digraph g2 = load_graph(g2_path);
      IndexClass cls = query_class.empty() ? detect_index(g1, g2) : parse_index_class(query_class);
      QuerySession session(cls, g1, g2);
      for (Vertex a : session.query(query_b)) out << a << '\n';
      return kExitOk;
    }
    if (*verify) {
      JoinGraph j = load_join_graph(j_path);
      Digraph g1 = load_graph(g1_path);
      Digraph g2 = load_graph(g2_path);
      if (g1.n() != g2.n() || j.original_count != g1.n()) {
        throw Error("vertex count mismatch between join graph and inputs");
      }
      VerifyReport r = verify_join_graph(j, g1, g2);
      if (r.ok) {
        out << "ok\n";
        return kExitOk;
      }
      out << "violation " << r.a << ' ' << r.b << " in_join=" << r.in_join
          << " expected=" << r.expected << '\n';
      return kExitVerifyFailed;
    }
    if (*stats) {
      JoinGraph j = load_join_graph(j_path);
      const Vertex n = j.original_count;
      if (n == 0) throw Error("empty join graph");
      out << "n\t" << n << '\n'
          << "steiner\t" << j.steiner_count() << '\n'
          << "arcs\t" << j.graph.m() << '\n'
          << "size\t" << j.size() << '\n'
          << std::fixed << std::setprecision(3)
          << "ratio_nlogn\t" << ratio_log(j.size(), n) << '\n'
          << "ratio_nlog2n\t" << ratio_log2(j.size(), n) << '\n';
      return kExitOk;
    }
    if (*bench) {
      run_bench(bench_suite, bench_max, bench_seed, out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "jr: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace jr
