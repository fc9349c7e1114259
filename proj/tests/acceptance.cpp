// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "bramblekit/bramble.hpp"
#include "bramblekit/decomposition.hpp"
#include "bramblekit/fpt.hpp"
#include "bramblekit/generators.hpp"
#include "bramblekit/gridlike.hpp"
#include "bramblekit/perfect.hpp"
#include "bramblekit/separators.hpp"
#include "bramblekit/web.hpp"
#include "bramblekit/witness.hpp"
#include "oracles.hpp"

using namespace bk;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

// Sets renumbered onto the induced subgraph of their union, so the mask
// oracles apply to hosts with more than 64 vertices.
struct Local {
  Graph graph;
  std::vector<std::vector<int>> sets;
};

Local localize(const Graph& g, const std::vector<VertexSet>& sets) {
  VertexSet u;
  for (const auto& s : sets) u = set_union(u, s);
  Subgraph sub = induced_subgraph(g, u);
  std::map<Vertex, int> local;
  for (std::size_t i = 0; i < u.size(); ++i) local[u[i]] = static_cast<int>(i);
  Local out{sub.graph, {}};
  for (const auto& s : sets) {
    std::vector<int> m;
    for (Vertex v : s) m.push_back(local[v]);
    out.sets.push_back(m);
  }
  return out;
}

Graph connected_random(int n, int m, std::uint64_t seed) {
  for (std::uint64_t s = seed;; s += 1000003) {
    Graph g = random_graph(n, m, s);
    if (is_connected(g)) return g;
  }
}

std::vector<VertexSet> subsets_of_size(int n, int size) {
  std::vector<VertexSet> out;
  for (oracle::Mask m = 0; m < (oracle::Mask{1} << n); ++m) {
    if (oracle::popcount(m) != size) continue;
    VertexSet s;
    for (int v = 0; v < n; ++v) {
      if ((m >> v) & 1) s.push_back(v);
    }
    out.push_back(s);
  }
  return out;
}

// Connected graphs on n vertices, one per isomorphism class.
std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  std::vector<int> idx(n * n, -1);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    idx[slots[i].first * n + slots[i].second] = static_cast<int>(i);
    idx[slots[i].second * n + slots[i].first] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::uint32_t canon = mask;
    for (const auto& q : perms) {
      std::uint32_t img = 0;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if ((mask >> i) & 1) img |= 1u << idx[q[slots[i].first] * n + q[slots[i].second]];
      }
      canon = std::min(canon, img);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((canon >> i) & 1) edges.push_back(slots[i]);
    }
    Graph g = Graph::from_pairs(n, edges);
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

bool oracle_decomposition(const Graph& g, const TreeDecomposition& td) {
  if (g.n() > 64 || td.bags.size() > 64) return true;  // beyond the mask oracle
  std::vector<std::pair<int, int>> tree;
  for (const auto& e : td.tree.edges()) tree.emplace_back(e.u, e.v);
  return oracle::is_decomposition(g, td.bags, tree);
}

// --- criteria --------------------------------------------------------------

Outcome grid_duality() {
  const auto t0 = Clock::now();
  std::ostringstream d;
  bool ok = true;
  for (int l = 2; l <= 4; ++l) {
    Graph g = grid(l);
    const int tw = exact_treewidth(g).width;
    if (l <= 3 && oracle::treewidth(g) != tw) ok = false;
    Bramble b = grid_bramble(l);
    const int order = bramble_order_exact(b).order;
    const int crosses = bramble_order_exact(crosses_bramble(l)).order;
    ok = ok && tw == l && order == l + 1 && oracle::hitting_order(b.elements) == l + 1 && !validate_bramble(g, b);
    d << "l=" << l << " tw=" << tw << " bramble order=" << order << " (plain crosses " << crosses << "); ";
  }
  const double s = seconds_since(t0);
  d << fmt(s) << "s";
  return {ok && s < 60, d.str()};
}

Outcome separator_sparsity() {
  const Constants cfg = Constants::desk();
  std::vector<Graph> graphs;
  for (int n = 3; n <= 6; ++n) {
    for (auto& g : connected_graphs_up_to_iso(n)) graphs.push_back(std::move(g));
  }
  const std::size_t exhaustive = graphs.size();
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const int n = 7 + static_cast<int>(rng() % 2);
    const int m = n - 1 + static_cast<int>(rng() % (n * (n - 1) / 2 - n + 2));
    graphs.push_back(connected_random(n, m, rng()));
  }
  long long checked = 0;
  long long premises = 0;
  long long violations = 0;
  long long library_mismatch = 0;
  for (const Graph& g : graphs) {
    auto seps = oracle::separations(g);
    for (int k : {1, 2}) {
      if (g.n() < 2 * k + 1) continue;
      for (const auto& w : subsets_of_size(g.n(), 2 * k + 1)) {
        ++checked;
        const oracle::Mask wm = oracle::mask_of(w);
        const bool balanced = oracle::balanced_separator_exists(seps, wm, k, {1, 2});
        const auto alpha = oracle::sparsest(seps, wm);
        if (balanced != balanced_separator_exact(g, w, k, Rational(1, 2), cfg).has_value()) ++library_mismatch;
        SparsityReport rep = sparse_separator_oracle(g, all_vertices(g), w, cfg);
        if (!alpha || !rep.exact || rep.alpha != Rational(alpha->numerator(), alpha->denominator())) ++library_mismatch;
        if (balanced) continue;
        ++premises;
        if (!alpha || *alpha < oracle::Ratio(1, 4 * k + 1)) ++violations;
      }
    }
  }
  std::ostringstream d;
  d << graphs.size() << " graphs (" << exhaustive << " exhaustive up to n=6, 500 random n<=8), " << checked
    << " terminal sets, " << premises << " without a balanced separator, " << violations << " violations, "
    << library_mismatch << " library/oracle mismatches";
  return {violations == 0 && library_mismatch == 0 && premises > 0, d.str()};
}

Outcome web_totality() {
  const Constants cfg = Constants::desk();
  const auto t0 = Clock::now();
  std::vector<Graph> graphs;
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 39);
    const int maxm = n * (n - 1) / 2;
    graphs.push_back(random_graph(n, static_cast<int>(rng() % (maxm + 1)), rng()));
  }
  for (int l = 2; l <= 12; ++l) graphs.push_back(grid(l));
  int runs = 0;
  int webs = 0;
  int bad = 0;
  std::string first;
  for (const Graph& g : graphs) {
    for (auto [k, h] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
      ++runs;
      WebOrDecomposition wd = build_web_or_decomposition(g, k, h, cfg);
      Check problem;
      if (auto* w = std::get_if<KWeb>(&wd)) {
        ++webs;
        problem = validate_web(g, *w);
      } else {
        const auto& td = std::get<TreeDecomposition>(wd);
        problem = validate_decomposition(g, td);
        if (!problem && td.width > (2 * h + 1) * k - 2) problem = "width above (2h+1)k-2";
        if (!problem && !oracle_decomposition(g, td)) problem = "rejected by the oracle";
      }
      if (problem) {
        ++bad;
        if (first.empty()) first = *problem;
      }
    }
  }
  std::ostringstream d;
  d << runs << " runs, " << webs << " webs, " << runs - webs << " decompositions, " << bad << " invalid";
  if (!first.empty()) d << " (" << first << ")";
  d << ", " << fmt(seconds_since(t0)) << "s";
  return {bad == 0, d.str()};
}

Outcome web_soundness() {
  Constants cfg = Constants::desk();
  const int cap = 22;  // admits the 22-vertex graphs that carry 3-webs of order 3
  std::vector<Graph> graphs;
  std::mt19937_64 rng(317);
  for (int i = 0; i < 60; ++i) {
    const int n = 8 + static_cast<int>(rng() % 11);
    const int maxm = n * (n - 1) / 2;
    graphs.push_back(random_graph(n, maxm * (30 + static_cast<int>(rng() % 71)) / 100, rng()));
  }
  graphs.push_back(grid(3));
  graphs.push_back(grid(4));
  for (int i = 0; i < 4; ++i) graphs.push_back(random_graph(22, 231 * (70 + 10 * i) / 100, 900 + i));
  std::map<int, int> found;
  int violations = 0;
  for (const Graph& g : graphs) {
    std::optional<int> tw;
    for (int k : {1, 2}) {
      auto wd = build_web_or_decomposition(g, k + 1, k + 1, cfg);
      auto* w = std::get_if<KWeb>(&wd);
      if (!w || validate_web(g, *w)) continue;
      ++found[k];
      if (!tw) tw = exact_treewidth(g, cap).width;
      if (*tw < k || web_width_lower_bound(g, *w) != k) ++violations;
    }
  }
  std::ostringstream d;
  d << graphs.size() << " graphs with n <= " << cap << "; webs found: k=1: " << found[1] << ", k=2: " << found[2]
    << "; " << violations << " violations";
  return {violations == 0 && found[1] > 0 && found[2] > 0, d.str()};
}

Outcome web_bramble_counts() {
  Constants cfg = Constants::desk();
  cfg.hitting_set_max_vertices = 64;
  std::ostringstream d;
  bool ok = true;
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 40}, {3, 80}}) {
    Graph g = complete(n);
    auto wd = build_web_or_decomposition(g, k * k, k, cfg);
    auto* w = std::get_if<KWeb>(&wd);
    if (!w) {
      d << "k=" << k << ": no web on K" << n << "; ";
      ok = false;
      continue;
    }
    Bramble b = bramble_from_web(g, *w);
    Local loc = localize(g, b.elements);
    const int order = oracle::hitting_order(loc.sets);
    const int bnb = bramble_order_exact(b, cfg).order;
    const bool valid = !validate_bramble(g, b) && oracle::is_bramble(loc.graph, loc.sets);
    ok = ok && static_cast<int>(b.elements.size()) == k * k * k && valid && order >= k && bnb == order;
    d << "k=" << k << " on K" << n << ": " << b.elements.size() << " elements, valid=" << valid
      << ", exact order " << order << "; ";
  }
  return {ok, d.str()};
}

Outcome find_bramble_monte_carlo() {
  const Constants cfg = Constants::desk();
  const auto t0 = Clock::now();
  Graph g = grid(8);
  int valid = 0;
  int count_ok = 0;
  int k = 0;
  std::size_t elements = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    FindBrambleResult r = find_bramble(g, cfg, seed);
    if (r.degenerate) continue;
    Local loc = localize(g, r.bramble.elements);
    if (!r.validation && !validate_bramble(g, r.bramble) && oracle::is_bramble(loc.graph, loc.sets)) ++valid;
    // floor(k^{3/2}) by integer square root of k^3, floor(ln 64) = 4
    const long long cube = static_cast<long long>(r.k) * r.k * r.k;
    long long root = static_cast<long long>(std::sqrt(static_cast<double>(cube)));
    while (root * root > cube) --root;
    while ((root + 1) * (root + 1) <= cube) ++root;
    if (r.bramble.elements.size() == static_cast<std::size_t>(root * 4)) ++count_ok;
    k = r.k;
    elements = r.bramble.elements.size();
  }
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << valid << "/10 valid, " << count_ok << "/10 with floor(k^1.5)*floor(ln n) elements (k=" << k << ", "
    << elements << " elements), " << fmt(s) << "s";
  return {valid >= 8 && count_ok == 10 && s < 600, d.str()};
}

// Random CNF with clauses of `width` distinct variables, each clause sharing
// variables with at most `bound` others.
CnfInstance sparse_cnf(int clauses, int width, int bound, std::mt19937_64& rng) {
  CnfInstance f;
  f.num_vars = clauses * width / 2;
  std::vector<std::vector<int>> users(f.num_vars);
  std::vector<std::set<int>> nbrs;
  int attempts = 0;
  while (static_cast<int>(f.clauses.size()) < clauses && attempts++ < 100 * clauses) {
    std::set<int> vars;
    while (static_cast<int>(vars.size()) < width) vars.insert(static_cast<int>(rng() % f.num_vars));
    std::set<int> touch;
    for (int v : vars) touch.insert(users[v].begin(), users[v].end());
    if (static_cast<int>(touch.size()) > bound) continue;
    if (std::any_of(touch.begin(), touch.end(), [&](int c) { return static_cast<int>(nbrs[c].size()) >= bound; })) continue;
    const int id = static_cast<int>(f.clauses.size());
    std::vector<int> clause;
    for (int v : vars) {
      clause.push_back(rng() % 2 ? v + 1 : -(v + 1));
      users[v].push_back(id);
    }
    for (int c : touch) nbrs[c].insert(id);
    nbrs.push_back(touch);
    f.clauses.push_back(clause);
  }
  return f;
}

Outcome lll_engine() {
  std::mt19937_64 rng(4242);
  long long instances = 0;
  long long disagreements = 0;
  for (int r = 1; r <= 3; ++r) {
    for (int t = 1; t <= 3; ++t) {
      for (int extra : {0, 1}) {  // extra members exercise the truncation
        const int size = (1 << t) + extra;
        std::vector<VertexSet> classes(r);
        std::vector<std::pair<Vertex, Vertex>> cross;
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < size; ++j) classes[i].push_back(i * size + j);
        }
        for (int a = 0; a < r * size; ++a) {
          for (int b = a + 1; b < r * size; ++b) {
            if (a / size != b / size) cross.emplace_back(a, b);
          }
        }
        const bool all = cross.size() <= 12;
        const std::uint64_t trials = all ? (std::uint64_t{1} << cross.size()) : 300;
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
          std::vector<std::pair<Vertex, Vertex>> edges;
          const int density = static_cast<int>(rng() % 60);
          for (std::size_t e = 0; e < cross.size(); ++e) {
            if (all ? ((trial >> e) & 1) : static_cast<int>(rng() % 100) < density) edges.push_back(cross[e]);
          }
          Graph h = Graph::from_pairs(r * size, edges);
          CnfInstance f = encode_transversal_cnf(h, classes);
          std::vector<std::vector<int>> kept(f.kept.begin(), f.kept.end());
          ++instances;
          if (oracle::satisfiable(f.num_vars, f.clauses) != oracle::transversal_exists(h, kept)) ++disagreements;
        }
      }
    }
  }
  int solved = 0;
  long long resamples = 0;
  long long clauses = 0;
  int bound_ok = 0;
  for (int i = 0; i < 100; ++i) {
    CnfInstance f = sparse_cnf(80, 8, 7, rng);
    MoserResult m = moser_resample(f, static_cast<std::uint64_t>(i), 1'000'000);
    if (m.satisfied && evaluate_cnf(f, m.assignment)) ++solved;
    if (m.bound_holds && max_clause_neighbors(f) <= 7) ++bound_ok;
    resamples += m.resamples;
    clauses += static_cast<long long>(f.clauses.size());
  }
  const double mean = static_cast<double>(resamples) / 100.0;
  const double mean_clauses = static_cast<double>(clauses) / 100.0;
  std::ostringstream d;
  d << "(a) " << instances << " encodings, " << disagreements << " disagreements; (b) " << solved
    << "/100 solved, bound held on " << bound_ok << ", mean resamples " << fmt(mean) << " vs " << fmt(mean_clauses)
    << " clauses";
  return {disagreements == 0 && solved == 100 && bound_ok == 100 && mean <= 10 * mean_clauses, d.str()};
}

Outcome top_minor_check() {
  const Constants cfg = Constants::desk();
  int ok = 0;
  int total = 0;
  std::ostringstream d;
  for (int n : {15, 20, 30}) {
    for (int p : {3, 4, 5}) {
      ++total;
      Graph g = complete(n);
      TopMinorResult r = top_minor(g, p, cfg);
      if (!r.model || validate_subdivision(g, complete(p), *r.model)) {
        d << "K" << n << " p=" << p << " failed at " << r.stage << "; ";
        continue;
      }
      std::vector<std::pair<std::pair<int, int>, std::vector<int>>> paths;
      for (const auto& ep : r.model->edge_paths) paths.push_back({{ep.a, ep.b}, ep.path});
      if (oracle::is_clique_subdivision(g, p, r.model->branch_vertices, paths)) ++ok;
    }
  }
  TopMinorResult sparse = top_minor(path_graph(50), 3, cfg);
  const bool density = !sparse.model && sparse.stage == "density";
  d << ok << "/" << total << " validated K_p subdivisions; path(50): stage " << sparse.stage << " (" << sparse.message
    << ")";
  return {ok == total && density, d.str()};
}

Outcome perfect_brambles() {
  Constants cfg = Constants::desk();
  struct Case {
    std::string name;
    Graph g;
    PerfectBramble pb;
    std::optional<GridLikeMinor> glm;
  };
  std::vector<Case> cases;
  {
    Graph g = grid(4);
    std::vector<Path> rows;
    std::vector<Path> cols;
    for (int i = 0; i < 4; ++i) {
      VertexSet r = grid_row(4, i);
      VertexSet c = grid_column(4, i);
      rows.push_back(Path(r.begin(), r.end()));
      cols.push_back(Path(c.begin(), c.end()));
    }
    GridLikeMinor glm{intersection_graph(rows, cols), 4, MinorModel{}, std::nullopt};
    for (int i = 0; i < 4; ++i) glm.model->branch_sets.push_back({i, 4 + i});
    cases.push_back({"grid(4) rows/columns", g, perfect_from_gridlike(g, glm), glm});
  }
  {
    Graph g = complete(6);
    MinorModel m;
    for (int i = 0; i < 6; ++i) m.branch_sets.push_back({i});
    GridLikeMinor glm = gridlike_from_clique_minor(g, m, 3);
    cases.push_back({"K6 template", g, perfect_from_gridlike(g, glm), glm});
  }
  {
    Graph g = complete(40);
    PipelineResult r = gridlike_pipeline(g, 2, cfg, 0);
    if (r.gridlike) cases.push_back({"K40 pipeline", g, perfect_from_gridlike(g, *r.gridlike), r.gridlike});
  }
  for (auto [n, order] : std::vector<std::pair<int, int>>{{60, 2}, {200, 3}}) {
    Graph g = complete(n);
    BoundedDegreeResult r = bounded_degree_subgraph(g, order, cfg, 0);
    if (r.bramble) cases.push_back({"K" + std::to_string(n) + " order " + std::to_string(order), g, *r.bramble, r.pipeline.gridlike});
  }
  int good = 0;
  int tw_checked = 0;
  std::ostringstream d;
  for (const auto& c : cases) {
    const int k = static_cast<int>(c.pb.elements.size());
    Local loc = localize(c.g, c.pb.elements);
    const int order = oracle::hitting_order(loc.sets);
    StructureReport rep = check_perfect_structure(c.pb, cfg);
    bool ok = !validate_perfect(c.g, c.pb) && rep.all() && order == (k + 1) / 2 && rep.order == order;
    if (c.glm && c.g.n() <= cfg.exact_treewidth_cap) {
      ++tw_checked;
      const int l = c.glm->order;
      ok = ok && !validate_gridlike(c.g, *c.glm) && (l + 1) / 2 - 1 <= exact_treewidth(c.g).width;
    }
    good += ok;
    d << c.name << ": k=" << k << " order " << order << (ok ? "" : " FAILED") << "; ";
  }
  d << good << "/" << cases.size() << " pass, treewidth bound checked on " << tw_checked;
  return {good == static_cast<int>(cases.size()) && cases.size() == 5 && tw_checked >= 2, d.str()};
}

Outcome fpt_dichotomy() {
  const Constants cfg = Constants::desk();
  std::vector<Graph> corpus;
  for (int n = 1; n <= 12; ++n) corpus.push_back(path_graph(n));
  for (int n = 2; n <= 7; ++n) corpus.push_back(complete(n));
  corpus.push_back(grid(2));
  corpus.push_back(grid(3));
  std::mt19937_64 rng(1234);
  while (corpus.size() < 320) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const int maxm = n * (n - 1) / 2;
    const int m = static_cast<int>(rng() % (std::min(maxm, 2 * n) + 1));
    Graph g = random_graph(n, m, rng());
    if (exact_treewidth(g).width <= 7) corpus.push_back(g);
  }
  int dp_mismatch = 0;
  int contradictions = 0;
  int decisions = 0;
  for (const Graph& g : corpus) {
    TreeDecomposition td = exact_treewidth(g).td;
    const int vc = oracle::vertex_cover(g);
    const int lp = oracle::longest_path(g);
    if (vc_width_dp(g, td).value != vc) ++dp_mismatch;
    if (longest_path_width_dp(g, td).value != lp) ++dp_mismatch;
    for (const auto& plugin : {vertex_cover_plugin(), longest_path_plugin()}) {
      const int truth = plugin.name == "vc" ? vc : lp;
      for (int k : {std::max(0, truth - 1), truth}) {
        DichotomyResult r = decide(g, plugin, k, cfg, 0);
        ++decisions;
        if ((r.verdict == "greater") != (truth > k) || validate_dichotomy(g, plugin, r)) ++contradictions;
      }
    }
  }
  std::ostringstream d;
  d << corpus.size() << " graphs, " << dp_mismatch << " DP mismatches, " << decisions << " decisions, "
    << contradictions << " contradictions";
  return {corpus.size() >= 300 && dp_mismatch == 0 && contradictions == 0, d.str()};
}

struct Emitted {
  std::string name;
  Graph g;
  Json doc;
};

std::vector<Emitted> emit_all() {
  const Constants cfg = Constants::desk();
  std::vector<Emitted> out;
  auto add = [&](std::string name, const Graph& g, const std::string& kind, Json payload, std::uint64_t seed) {
    out.push_back({name, g, make_witness(g, "edgelist", kind, std::move(payload), name, seed, cfg)});
  };
  Graph g3 = grid(3);
  add("exact-td", g3, "tree-decomposition", decomposition_to_json(exact_treewidth(g3).td, true), 0);
  Graph r20 = random_graph(20, 40, 5);
  add("approx-td", r20, "tree-decomposition", decomposition_to_json(approximate_treewidth(r20, cfg).td, false), 0);
  Graph g6 = grid(6);
  add("find-bramble", g6, "bramble", bramble_to_json(find_bramble(g6, cfg, 1).bramble), 1);
  Graph k40 = complete(40);
  KWeb web = std::get<KWeb>(build_web_or_decomposition(k40, 4, 2, cfg));
  add("kweb", k40, "kweb", web_to_json(web), 0);
  add("web-bramble", k40, "bramble", bramble_to_json(bramble_from_web(k40, web)), 0);
  Graph p30 = path_graph(30);
  add("web-td", p30, "tree-decomposition",
      decomposition_to_json(std::get<TreeDecomposition>(build_web_or_decomposition(p30, 2, 2, cfg)), false), 0);
  add("gridlike", k40, "gridlike", gridlike_to_json(*gridlike_pipeline(k40, 2, cfg, 3).gridlike), 3);
  Graph g4 = grid(4);
  {
    std::vector<Path> rows;
    std::vector<Path> cols;
    for (int i = 0; i < 4; ++i) {
      VertexSet r = grid_row(4, i);
      VertexSet c = grid_column(4, i);
      rows.push_back(Path(r.begin(), r.end()));
      cols.push_back(Path(c.begin(), c.end()));
    }
    GridLikeMinor glm{intersection_graph(rows, cols), 4, MinorModel{}, std::nullopt};
    for (int i = 0; i < 4; ++i) glm.model->branch_sets.push_back({i, 4 + i});
    add("gridlike-model", g4, "gridlike", gridlike_to_json(glm), 0);
    add("perfect-grid", g4, "perfect-bramble", perfect_to_json(perfect_from_gridlike(g4, glm), cfg), 0);
  }
  Graph k60 = complete(60);
  add("perfect-k60", k60, "perfect-bramble", perfect_to_json(*bounded_degree_subgraph(k60, 2, cfg, 2).bramble, cfg), 2);
  add("decide-bramble", k60, "dichotomy", dichotomy_to_json(decide(k60, vertex_cover_plugin(), 1, cfg, 0), "vc", cfg), 0);
  add("decide-lp", g3, "dichotomy",
      dichotomy_to_json(decide(g3, longest_path_plugin(), 8, cfg, 0), "longest-path", cfg), 0);
  Graph p20 = path_graph(20);
  add("decide-vc", p20, "dichotomy", dichotomy_to_json(decide(p20, vertex_cover_plugin(), 5, cfg, 0), "vc", cfg), 0);
  Graph r12 = random_graph(12, 30, 8);
  VertexSet w0{0, 2, 4, 6};
  auto refined = refine_or_unsplittable(r12, all_vertices(r12), w0, 1, cfg);
  if (auto* x = std::get_if<UnsplittableSet>(&refined)) add("unsplittable", r12, "unsplittable-set", unsplittable_to_json(*x), 0);
  return out;
}

Outcome certificates() {
  std::vector<Emitted> first = emit_all();
  std::vector<Emitted> second = emit_all();
  int verified = 0;
  int identical = 0;
  std::string unverified;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const std::string text = dump_witness(first[i].doc);
    if (auto bad = verify_witness(first[i].g, Json::parse(text))) {
      if (unverified.empty()) unverified = first[i].name + ": " + *bad;
    } else {
      ++verified;
    }
    if (i < second.size() && text == dump_witness(second[i].doc)) ++identical;
  }
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < first.size(); ++i) at[first[i].name] = i;

  using Mutation = std::function<void(Json&)>;
  std::vector<std::pair<std::string, Mutation>> muts;
  auto on = [&](const std::string& name, Mutation m) { muts.emplace_back(name, std::move(m)); };
  auto first_order = [](Json& d, const std::string& method, int claim) {
    d["payload"]["order"] = {{"lower_bound", claim}, {"method", method}};
  };
  // envelope
  on("exact-td", [](Json& d) { d["graph_ref"]["hash"] = "0000000000000000"; });
  on("exact-td", [](Json& d) { d["graph_ref"]["n"] = 10; });
  on("exact-td", [](Json& d) { d["graph_ref"]["m"] = 11; });
  on("exact-td", [](Json& d) { d["graph_ref"]["format"] = "graphml"; });
  on("exact-td", [](Json& d) { d["extra"] = 1; });
  on("exact-td", [](Json& d) { d.erase("payload"); });
  on("exact-td", [](Json& d) { d["kind"] = "kweb"; });
  on("exact-td", [](Json& d) { d["provenance"]["validation"] = "violation: x"; });
  on("exact-td", [](Json& d) { d["provenance"]["constants"]["beta1"] = "zero"; });
  on("exact-td", [](Json& d) { d["provenance"]["constants"]["unknown"] = 1; });
  on("exact-td", [](Json& d) { d["provenance"]["algorithm"] = ""; });
  // tree decompositions
  on("exact-td", [](Json& d) { d["payload"]["width"] = 2; });
  on("exact-td", [](Json& d) { d["payload"]["bags"][0] = Json::array({0}); });
  on("exact-td", [](Json& d) { d["payload"]["tree_edges"].erase(0); });
  on("exact-td", [](Json& d) { d["payload"]["bags"][0].push_back(99); });
  on("approx-td", [](Json& d) { d["payload"]["exact"] = true; });
  on("approx-td", [](Json& d) { d["payload"]["tree_edges"].push_back(d["payload"]["tree_edges"][0]); });
  on("web-td", [](Json& d) { d["payload"]["width"] = 0; });
  on("web-td", [](Json& d) { d["payload"]["bags"].erase(d["payload"]["bags"].size() - 1); });
  // brambles
  on("find-bramble", [](Json& d) { d["payload"]["elements"][0] = Json::array({0, 35}); });
  on("find-bramble", [](Json& d) { d["payload"]["elements"][0] = Json::array(); });
  on("find-bramble", [&](Json& d) { first_order(d, "exact-hitting-set", 99); });
  on("find-bramble", [&](Json& d) { first_order(d, "lp-fractional", 40); });
  on("find-bramble", [&](Json& d) { first_order(d, "sorcery", 1); });
  on("web-bramble", [](Json& d) { d["payload"]["elements"].push_back(Json::array({99})); });
  on("web-bramble", [&](Json& d) { first_order(d, "structural", 9); });
  on("web-bramble", [](Json& d) { d["payload"]["elements"][0] = Json::array({3, 1}); });
  // webs
  on("kweb", [](Json& d) { d["payload"]["linkages"].erase(0); });
  on("kweb", [](Json& d) { d["payload"]["k"] = 5; });
  on("kweb", [](Json& d) { d["payload"]["h"] = 3; });
  on("kweb", [](Json& d) { d["payload"]["linkages"][0]["paths"][0].erase(0); });
  on("kweb", [](Json& d) { d["payload"]["subtrees"][1] = d["payload"]["subtrees"][0]; });
  on("kweb", [](Json& d) { d["payload"]["tree"]["edges"].erase(0); });
  on("kweb", [](Json& d) { d["payload"]["body"] = Json::array(); });
  on("kweb", [](Json& d) { d["payload"]["flats"][0] = Json::array(); });
  // grid-like minors
  on("gridlike", [](Json& d) { d["payload"]["order"] = 3; });
  on("gridlike", [](Json& d) { d["payload"]["intersection_edges"].erase(0); });
  on("gridlike", [](Json& d) { d["payload"]["left"][0].push_back(d["payload"]["right"][0][0]); });
  on("gridlike", [](Json& d) { d["payload"]["subdivision"]["branch_vertices"][0] = 1; });
  on("gridlike", [](Json& d) { d["payload"]["subdivision"] = nullptr; });
  on("gridlike-model", [](Json& d) { d["payload"]["model"]["branch_sets"][0] = Json::array({0, 1}); });
  on("gridlike-model", [](Json& d) { d["payload"]["model"]["branch_sets"].erase(3); });
  on("gridlike-model", [](Json& d) { d["payload"]["left"][0] = Json::array({0, 1, 2, 7}); });
  on("gridlike-model", [](Json& d) { d["payload"]["right"].erase(3); });
  // perfect brambles
  on("perfect-grid", [](Json& d) { d["payload"]["elements"][0].erase(0); });
  on("perfect-grid", [](Json& d) { d["payload"]["edges"][0].erase(0); });
  on("perfect-grid", [](Json& d) { d["payload"]["order"]["lower_bound"] = 3; });
  on("perfect-grid", [](Json& d) { d["payload"]["host_union"]["vertices"].erase(0); });
  on("perfect-grid", [](Json& d) { d["payload"]["structure"]["exact_order"] = false; });
  on("perfect-grid", [](Json& d) { d["payload"]["elements"].push_back(d["payload"]["elements"][0]); });
  on("perfect-k60", [](Json& d) { d["payload"]["edges"][1].push_back(Json::array({0, 59})); });
  on("perfect-k60", [](Json& d) { d["payload"]["elements"].erase(3); });
  on("perfect-k60", [](Json& d) { d["payload"]["structure"]["order"] = 1; });
  // dichotomies
  on("decide-bramble", [](Json& d) { d["payload"]["verdict"] = "at-most"; });
  on("decide-bramble", [](Json& d) { d["payload"]["bound"] = 99; });
  on("decide-bramble", [](Json& d) { d["payload"]["k"] = 50; });
  on("decide-bramble", [](Json& d) { d["payload"]["bramble"]["elements"].erase(0); });
  on("decide-bramble", [](Json& d) { d["payload"]["branch"] = "oracle"; });
  on("decide-lp", [](Json& d) { d["payload"]["value"] = 9; });
  on("decide-lp", [](Json& d) { d["payload"]["solution"]["witness"].erase(0); });
  on("decide-lp", [](Json& d) { d["payload"]["verdict"] = "greater"; });
  on("decide-lp", [](Json& d) { d["payload"]["parameter"] = "vc"; });
  on("decide-vc", [](Json& d) { d["payload"]["solution"]["witness"].erase(0); });
  on("decide-vc", [](Json& d) { d["payload"]["k"] = 12; });
  on("decide-vc", [](Json& d) { d["payload"]["decomposition"]["bags"].erase(0); });
  on("decide-vc", [](Json& d) { d["payload"]["parameter"] = "treewidth"; });
  // unsplittable sets
  on("unsplittable", [](Json& d) { d["payload"]["k"] = 7; });
  on("unsplittable", [](Json& d) { d["payload"]["w"].push_back(99); });
  on("unsplittable", [](Json& d) { d["payload"]["alpha_witness"] = "1/1000"; });
  on("unsplittable", [](Json& d) { d["payload"]["alpha_lb"] = "0"; });

  int applied = 0;
  int rejected = 0;
  std::string escaped;
  for (std::size_t i = 0; i < muts.size(); ++i) {
    auto it = at.find(muts[i].first);
    if (it == at.end()) continue;
    const Emitted& e = first[it->second];
    if (verify_witness(e.g, e.doc)) continue;  // baseline must verify for the mutation to count
    Json d = e.doc;
    muts[i].second(d);
    ++applied;
    if (verify_witness(e.g, d)) {
      ++rejected;
    } else if (escaped.empty()) {
      escaped = muts[i].first + " mutation " + std::to_string(i);
    }
  }
  std::ostringstream d;
  d << verified << "/" << first.size() << " witnesses re-verify, " << identical << "/" << first.size()
    << " byte-identical on re-run, " << rejected << "/" << applied << " mutations rejected";
  if (!unverified.empty()) d << " (" << unverified << ")";
  if (!escaped.empty()) d << " (accepted: " << escaped << ")";
  const bool all = verified == static_cast<int>(first.size()) && identical == static_cast<int>(first.size());
  return {all && applied >= 50 && rejected == applied, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 grid duality", grid_duality},
      {"2 separator sparsity", separator_sparsity},
      {"3 web dichotomy totality", web_totality},
      {"4 web soundness", web_soundness},
      {"5 bramble from web", web_bramble_counts},
      {"6 FIND-BRAMBLE Monte Carlo", find_bramble_monte_carlo},
      {"7 LLL engine", lll_engine},
      {"8 TOP-MINOR", top_minor_check},
      {"9 perfect brambles", perfect_brambles},
      {"10 FPT dichotomy", fpt_dichotomy},
      {"11 certificates", certificates},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << name << "] " << o.detail << " (" << fmt(seconds_since(t0))
              << "s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
