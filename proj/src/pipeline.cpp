#include <algorithm>
#include <map>
#include <queue>

#include "bramblekit/generators.hpp"
#include "bramblekit/gridlike.hpp"

namespace bk {

HorizontalTemplate horizontal_template(int l) {
  if (l < 2) throw InputError("horizontal_template: l must be at least 2");
  HorizontalTemplate t;
  t.l = l;
  std::vector<std::vector<Vertex>> id(l, std::vector<Vertex>(l, -1));
  Vertex next = 0;
  t.rows.resize(l);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      if (j == i) continue;
      id[i][j] = next;
      t.rows[i].push_back(next++);
    }
  }
  std::vector<Edge> edges;
  for (const auto& row : t.rows) {
    for (std::size_t x = 0; x + 1 < row.size(); ++x) edges.push_back({row[x], row[x + 1]});
  }
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      t.vertical_pairs.push_back({i, j});
      t.vertical_edges.push_back(make_edge(id[i][j], id[j][i]));
      edges.push_back(make_edge(id[i][j], id[j][i]));
    }
  }
  t.graph = Graph(next, std::move(edges));
  return t;
}

namespace {

// BFS spanning tree of g[set], rooted at its smallest vertex.
TreeSubgraph spanning_tree(const Graph& g, const VertexSet& set) {
  TreeSubgraph t;
  t.vertices = set;
  std::vector<char> seen(g.n(), 0);
  std::vector<char> in(g.n(), 0);
  for (Vertex v : set) in[v] = 1;
  std::queue<Vertex> q;
  q.push(set.front());
  seen[set.front()] = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        t.edges.push_back(make_edge(v, w));
        q.push(w);
      }
    }
  }
  return t;
}

Path tree_path(const TreeSubgraph& t, Vertex from, Vertex to) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& e : t.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::map<Vertex, Vertex> parent{{from, from}};
  std::queue<Vertex> q;
  q.push(from);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : adj[v]) {
      if (!parent.count(w)) {
        parent[w] = v;
        q.push(w);
      }
    }
  }
  Path p{to};
  while (p.back() != from) p.push_back(parent.at(p.back()));
  std::reverse(p.begin(), p.end());
  return p;
}

// Vertex of t from which the paths to the terminals (with multiplicity) meet
// only at that vertex.
Vertex find_center(const TreeSubgraph& t, const std::vector<Vertex>& terminals) {
  for (Vertex c : t.vertices) {
    std::map<Vertex, int> by_direction;
    bool ok = true;
    for (Vertex x : terminals) {
      if (x == c) continue;
      Path p = tree_path(t, c, x);
      if (++by_direction[p[1]] > 1) ok = false;
    }
    if (ok) return c;
  }
  throw InputError("find_center: terminals admit no center");
}

}  // namespace

GridLikeMinor gridlike_from_clique_minor(const Graph& g, const MinorModel& model, int l) {
  HorizontalTemplate ht = horizontal_template(l);
  const int nh = ht.graph.n();
  if (static_cast<int>(model.branch_sets.size()) < nh) {
    throw InputError("gridlike_from_clique_minor: need a K_" + std::to_string(nh) + " model");
  }
  // attachment edge per template edge, branch set v = model.branch_sets[v]
  std::vector<std::vector<char>> in(nh, std::vector<char>(g.n(), 0));
  for (int v = 0; v < nh; ++v) {
    for (Vertex x : model.branch_sets[v]) in[v][x] = 1;
  }
  std::vector<std::pair<Vertex, Vertex>> attach;
  std::vector<std::vector<Vertex>> terminals(nh);
  for (const auto& e : ht.graph.edges()) {
    std::optional<std::pair<Vertex, Vertex>> found;
    for (Vertex x : model.branch_sets[e.u]) {
      for (Vertex y : g.neighbors(x)) {
        if (in[e.v][y]) {
          found = {x, y};
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw InputError("gridlike_from_clique_minor: branch sets are not adjacent");
    attach.push_back(*found);
    terminals[e.u].push_back(found->first);
    terminals[e.v].push_back(found->second);
  }
  std::vector<TreeSubgraph> trees(nh);
  std::vector<Vertex> center(nh);
  for (int v = 0; v < nh; ++v) {
    trees[v] = minimal_subtree(spanning_tree(g, model.branch_sets[v]), make_set(terminals[v]));
    center[v] = find_center(trees[v], terminals[v]);
  }
  // image of each template edge as a path between centers
  std::map<std::pair<Vertex, Vertex>, Path> image;
  std::size_t ei = 0;
  for (const auto& e : ht.graph.edges()) {
    Path p = tree_path(trees[e.u], center[e.u], attach[ei].first);
    Path back = tree_path(trees[e.v], attach[ei].second, center[e.v]);
    p.insert(p.end(), back.begin(), back.end());
    image[{e.u, e.v}] = std::move(p);
    ++ei;
  }
  auto edge_image = [&](Vertex a, Vertex b) {
    if (a < b) return image.at({a, b});
    Path p = image.at({b, a});
    std::reverse(p.begin(), p.end());
    return p;
  };
  std::vector<Path> rows;
  for (const auto& row : ht.rows) {
    Path p{center[row.front()]};
    for (std::size_t x = 0; x + 1 < row.size(); ++x) {
      Path seg = edge_image(row[x], row[x + 1]);
      p.insert(p.end(), seg.begin() + 1, seg.end());
    }
    rows.push_back(std::move(p));
  }
  std::vector<Path> verticals;
  for (const auto& e : ht.vertical_edges) verticals.push_back(edge_image(e.u, e.v));
  GridLikeMinor glm;
  glm.ig = intersection_graph(rows, verticals);
  glm.order = l;
  SubdivisionModel sm;
  for (int i = 0; i < l; ++i) sm.branch_vertices.push_back(i);
  for (std::size_t q = 0; q < ht.vertical_pairs.size(); ++q) {
    auto [a, b] = ht.vertical_pairs[q];
    sm.edge_paths.push_back({a, b, {a, l + static_cast<Vertex>(q), b}});
  }
  glm.subdivision = std::move(sm);
  return glm;
}

namespace {

long long ceil_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (Rational(q) < r) ++q;
  return q;
}

}  // namespace

PipelineResult web_minor_stages(const Graph& g, int p, int h, int k, const Constants& cfg, std::uint64_t seed) {
  if (p < 1 || h < 1 || k < 1) throw InputError("web_minor_stages: p, h and k must be positive");
  PipelineResult out;
  out.p = p;
  out.h = h;
  out.k = k;
  auto fail = [&](std::string stage, std::string msg) {
    out.outcome = "failure";
    out.stage = std::move(stage);
    out.message = std::move(msg);
    out.log.push_back(out.stage + ": " + out.message);
    return out;
  };

  // (a) web of order h
  WebOrDecomposition wd = build_web_or_decomposition(g, k, h, cfg);
  if (auto* td = std::get_if<TreeDecomposition>(&wd)) {
    out.counter_witness = *td;
    return fail("web", "no web of order " + std::to_string(h) + " with width " + std::to_string(k) +
                           "; decomposition of width " + std::to_string(td->width));
  }
  const KWeb& web = std::get<KWeb>(wd);
  out.log.push_back("web: order " + std::to_string(web.h) + ", " + std::to_string(web.linkages.size()) + " families");

  // (c) dense pairs of families
  const long long dense = ceil_of(cfg.c_top * Rational(static_cast<long long>(p) * p));
  const auto& fam = web.linkages;
  for (std::size_t a = 0; a < fam.size(); ++a) {
    for (std::size_t b = a + 1; b < fam.size(); ++b) {
      IntersectionGraph ig = intersection_graph(fam[a].paths, fam[b].paths);
      const long long nv = ig.base.n();
      if (nv == 0 || 2 * static_cast<long long>(ig.base.m()) < dense * nv) continue;
      TopMinorResult tm = top_minor(ig.base, p, cfg);
      out.log.push_back("dense pair (" + std::to_string(a) + ", " + std::to_string(b) + "): top_minor " + tm.stage);
      if (!tm.model) continue;
      GridLikeMinor glm;
      glm.ig = std::move(ig);
      glm.order = p;
      glm.subdivision = std::move(tm.model);
      if (auto bad = validate_gridlike(g, glm)) return fail("dense", "grid-like minor rejected: " + *bad);
      out.outcome = "gridlike";
      out.stage = "dense";
      out.message = "topological grid-like minor of order " + std::to_string(p);
      out.gridlike = std::move(glm);
      return out;
    }
  }

  // (d) transversal over the families; paths touching T outside their own ends are dropped
  std::vector<char> on_tree(g.n(), 0);
  for (Vertex v : web.tree.vertices) on_tree[v] = 1;
  std::vector<Path> paths;
  std::vector<VertexSet> classes;
  for (const auto& L : fam) {
    VertexSet cls;
    for (const auto& path : L.paths) {
      bool clean = true;
      for (std::size_t x = 1; x + 1 < path.size(); ++x) clean = clean && !on_tree[path[x]];
      if (!clean) continue;
      cls.push_back(static_cast<Vertex>(paths.size()));
      paths.push_back(path);
    }
    if (cls.empty()) {
      return fail("transversal", "every path of pair (" + std::to_string(L.i) + ", " + std::to_string(L.j) +
                                     ") crosses the tree");
    }
    classes.push_back(std::move(cls));
  }
  std::vector<std::vector<int>> users(g.n());
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
    for (Vertex v : paths[i]) users[v].push_back(i);
  }
  std::vector<Edge> conflicts;
  for (const auto& us : users) {
    for (std::size_t x = 0; x < us.size(); ++x) {
      for (std::size_t y = x + 1; y < us.size(); ++y) conflicts.push_back(make_edge(us[x], us[y]));
    }
  }
  std::sort(conflicts.begin(), conflicts.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  conflicts.erase(std::unique(conflicts.begin(), conflicts.end()), conflicts.end());
  Graph hgraph(static_cast<int>(paths.size()), std::move(conflicts));
  const int d = static_cast<int>(ceil_of(cfg.c_degeneracy * Rational(static_cast<long long>(p) * p)));
  TransversalResult tr = lll_transversal(hgraph, classes, std::max(1, d), seed, cfg);
  out.log.push_back("transversal: " + tr.report);
  if (!tr.picks) return fail("transversal", tr.report);

  CliqueLinkage cl;
  MinorModel model;
  for (int i = 0; i < web.h; ++i) {
    TreeSubgraph t;
    t.vertices = web.subtrees[i];
    for (const auto& e : web.tree.edges) {
      if (contains(t.vertices, e.u) && contains(t.vertices, e.v)) t.edges.push_back(e);
    }
    cl.trees.push_back(std::move(t));
    model.branch_sets.push_back(web.subtrees[i]);
  }
  for (std::size_t f = 0; f < fam.size(); ++f) {
    const Path& q = paths[(*tr.picks)[f]];
    cl.qpaths.push_back({fam[f].i, fam[f].j, {q}});
    VertexSet inner(q.begin() + 1, q.end() - 1);
    model.branch_sets[fam[f].i] = set_union(model.branch_sets[fam[f].i], make_set(inner));
  }
  if (auto bad = validate_minor_model(g, complete(web.h), model)) return fail("clique-minor", "model rejected: " + *bad);
  out.outcome = "clique-minor";
  out.stage = "transversal";
  out.message = "K_" + std::to_string(web.h) + " minor via " + tr.method;
  out.clique_minor = std::move(model);
  out.linkage = std::move(cl);
  return out;
}

PipelineResult gridlike_pipeline(const Graph& g, int p, const Constants& cfg, std::uint64_t seed) {
  if (p < 2) throw InputError("gridlike_pipeline: p must be at least 2");
  const int h = std::max(2, p * (p - 1));
  const long long hp = static_cast<long long>(h) * h * p * p;
  const int k = static_cast<int>(std::max<long long>({static_cast<long long>(h) * (h - 1) / 2,
                                                      ceil_of(cfg.c_web * Rational(hp)), 1}));
  PipelineResult out = web_minor_stages(g, p, h, k, cfg, seed);
  if (out.outcome != "clique-minor") return out;
  // (e) K_h minor through the horizontal template
  GridLikeMinor glm = gridlike_from_clique_minor(g, *out.clique_minor, p);
  if (auto bad = validate_gridlike(g, glm)) {
    out.outcome = "failure";
    out.stage = "template";
    out.message = "converted grid-like minor rejected: " + *bad;
    return out;
  }
  out.log.push_back("template: order " + std::to_string(p) + " from K_" + std::to_string(h));
  out.outcome = "gridlike";
  out.stage = "template";
  out.message = "topological grid-like minor of order " + std::to_string(p) + " via the template";
  out.gridlike = std::move(glm);
  return out;
}

}  // namespace bk
