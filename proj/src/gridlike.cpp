#include "bramblekit/gridlike.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bramblekit/generators.hpp"

namespace bk {

namespace {

Check family_disjoint(const std::vector<Path>& family, const char* name) {
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].empty()) return std::string(name) + " path " + std::to_string(i) + " is empty";
    for (Vertex v : family[i]) {
      if (!seen.insert(v).second) {
        return std::string(name) + " paths share vertex " + std::to_string(v);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

IntersectionGraph intersection_graph(const std::vector<Path>& p, const std::vector<Path>& q) {
  if (auto bad = family_disjoint(p, "left")) throw InputError("intersection_graph: " + *bad);
  if (auto bad = family_disjoint(q, "right")) throw InputError("intersection_graph: " + *bad);
  IntersectionGraph ig;
  ig.left = p;
  ig.right = q;
  std::vector<VertexSet> ps;
  std::vector<VertexSet> qs;
  for (const auto& x : p) ps.push_back(make_set(x));
  for (const auto& x : q) qs.push_back(make_set(x));
  std::vector<Edge> edges;
  const int np = static_cast<int>(p.size());
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < static_cast<int>(q.size()); ++j) {
      if (intersects(ps[i], qs[j])) edges.push_back({i, np + j});
    }
  }
  ig.base = Graph(np + static_cast<int>(q.size()), std::move(edges));
  return ig;
}

Check validate_gridlike(const Graph& g, const GridLikeMinor& glm) {
  for (const auto* fam : {&glm.ig.left, &glm.ig.right}) {
    for (const auto& path : *fam) {
      if (auto bad = check_path(g, path)) return "family path: " + *bad;
    }
  }
  if (auto bad = family_disjoint(glm.ig.left, "left")) return *bad;
  if (auto bad = family_disjoint(glm.ig.right, "right")) return *bad;
  IntersectionGraph fresh = intersection_graph(glm.ig.left, glm.ig.right);
  if (!(fresh.base == glm.ig.base)) return "intersection graph does not match the families";
  if (glm.order < 1) return "order must be positive";
  if (glm.model.has_value() == glm.subdivision.has_value()) return "exactly one of model and subdivision expected";
  Graph templ = complete(glm.order);
  if (glm.subdivision) {
    if (auto bad = validate_subdivision(glm.ig.base, templ, *glm.subdivision)) return "subdivision: " + *bad;
  } else if (auto bad = validate_minor_model(glm.ig.base, templ, *glm.model)) {
    return "minor model: " + *bad;
  }
  return std::nullopt;
}

namespace {

// Mutable subgraph used by the Mader reduction.
struct WorkGraph {
  std::vector<char> alive;
  std::vector<std::set<Vertex>> adj;
  long long n = 0;
  long long e = 0;

  explicit WorkGraph(const Graph& g) : alive(g.n(), 1), adj(g.n()) {
    for (const auto& ed : g.edges()) {
      adj[ed.u].insert(ed.v);
      adj[ed.v].insert(ed.u);
    }
    n = g.n();
    e = static_cast<long long>(g.m());
  }

  void remove_vertex(Vertex v) {
    for (Vertex w : adj[v]) adj[w].erase(v);
    e -= static_cast<long long>(adj[v].size());
    adj[v].clear();
    alive[v] = 0;
    --n;
  }

  void remove_edge(Vertex a, Vertex b) {
    adj[a].erase(b);
    adj[b].erase(a);
    --e;
  }

  Subgraph local() const {
    Subgraph s;
    std::vector<int> id(alive.size(), -1);
    for (Vertex v = 0; v < static_cast<Vertex>(alive.size()); ++v) {
      if (alive[v]) {
        id[v] = static_cast<int>(s.to_host.size());
        s.to_host.push_back(v);
      }
    }
    std::vector<Edge> edges;
    for (Vertex v : s.to_host) {
      for (Vertex w : adj[v]) {
        if (v < w) edges.push_back({id[v], id[w]});
      }
    }
    s.graph = Graph(static_cast<int>(s.to_host.size()), std::move(edges));
    return s;
  }
};

long long ceil_rational(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (Rational(q) < r) ++q;
  return q;
}

}  // namespace

TopMinorResult top_minor(const Graph& g, int p, const Constants& cfg) {
  if (p < 1) throw InputError("top_minor: p must be positive");
  TopMinorResult out;
  auto fail = [&](std::string stage, std::string msg) {
    out.stage = std::move(stage);
    out.message = std::move(msg);
    return out;
  };
  const long long p2 = static_cast<long long>(p) * p;
  // density precondition e(G) >= c_deg p^2 n
  const Rational dens = cfg.c_deg * Rational(p2) * Rational(g.n());
  if (Rational(static_cast<long long>(g.m())) < dens || g.n() < p) {
    return fail("density", "e(G) = " + std::to_string(g.m()) + " < c_deg p^2 n = " + to_string(dens));
  }
  if (p == 1) {
    out.model = SubdivisionModel{{0}, {}};
    out.g1 = {0};
    out.x = {0};
    out.stage = "done";
    return out;
  }

  // 1. Mader: minimal subgraph with n >= 2K and e > 2K(n - K)
  const long long kappa = std::max<long long>(1, ceil_rational(cfg.c_conn * Rational(p2)));
  auto cond = [&](long long n, long long e) { return n >= 2 * kappa && e > 2 * kappa * (n - kappa); };
  WorkGraph w(g);
  if (!cond(w.n, w.e)) {
    return fail("connectivity", "no subgraph with n >= " + std::to_string(2 * kappa) + " and e > 2K(n - K), K = " +
                                    std::to_string(kappa));
  }
  while (true) {
    bool changed = false;
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (w.alive[v]) order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return w.adj[a].size() < w.adj[b].size(); });
    for (Vertex v : order) {
      if (cond(w.n - 1, w.e - static_cast<long long>(w.adj[v].size()))) {
        w.remove_vertex(v);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    if (cond(w.n, w.e - 1)) {
      for (Vertex v = 0; v < g.n() && !changed; ++v) {
        if (w.alive[v] && !w.adj[v].empty()) {
          w.remove_edge(v, *w.adj[v].begin());
          changed = true;
        }
      }
      if (changed) continue;
    }
    // split along a small separation when one side keeps the property
    Subgraph loc = w.local();
    for (Vertex a = 0; a < loc.graph.n() && !changed; ++a) {
      for (Vertex b = a + 1; b < loc.graph.n() && !changed; ++b) {
        if (loc.graph.adjacent(a, b)) continue;
        VertexSet cut = min_vertex_cut(loc.graph, a, b, all_vertices(loc.graph));
        if (static_cast<long long>(cut.size()) > kappa) continue;
        for (const auto& side : components(loc.graph, cut)) {
          VertexSet keep = set_union(side, cut);
          Subgraph part = induced_subgraph(loc.graph, keep);
          if (static_cast<long long>(keep.size()) < w.n &&
              cond(static_cast<long long>(keep.size()), static_cast<long long>(part.graph.m()))) {
            std::vector<char> in(g.n(), 0);
            for (Vertex v : keep) in[loc.to_host[v]] = 1;
            for (Vertex v = 0; v < g.n(); ++v) {
              if (w.alive[v] && !in[v]) w.remove_vertex(v);
            }
            changed = true;
            break;
          }
        }
      }
    }
    if (!changed) break;
  }
  Subgraph g1 = w.local();
  out.g1 = g1.to_host;

  // 2./3. X and the neighbour sets Y_i
  const int nx = cfg.top_x_factor * p;
  const int ny = cfg.top_y_factor * p;
  if (g1.graph.n() < nx) {
    return fail("selection", "G1 has " + std::to_string(g1.graph.n()) + " vertices, fewer than |X| = " + std::to_string(nx));
  }
  std::vector<Vertex> x;
  for (int i = 0; i < nx; ++i) x.push_back(i);  // local ids; to_host is increasing
  for (Vertex v : x) out.x.push_back(g1.to_host[v]);
  std::vector<char> used(g1.graph.n(), 0);
  for (Vertex v : x) used[v] = 1;
  std::vector<VertexSet> y(nx);
  for (int i = 0; i < nx; ++i) {
    for (Vertex nb : g1.graph.neighbors(x[i])) {
      if (static_cast<int>(y[i].size()) == ny) break;
      if (!used[nb]) {
        used[nb] = 1;
        y[i].push_back(nb);
      }
    }
  }

  // 5. p indices whose ports cover their non-adjacent partners
  std::vector<int> cap(nx);
  for (int i = 0; i < nx; ++i) {
    int adj_x = 0;
    for (int j = 0; j < nx; ++j) adj_x += j != i && g1.graph.adjacent(x[i], x[j]);
    cap[i] = static_cast<int>(y[i].size()) + adj_x;
  }
  std::vector<int> idx(nx);
  for (int i = 0; i < nx; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return cap[a] > cap[b]; });
  std::vector<int> jsel(idx.begin(), idx.begin() + p);
  std::sort(jsel.begin(), jsel.end());
  std::vector<int> need(p);
  for (int a = 0; a < p; ++a) {
    int adj_j = 0;
    for (int b = 0; b < p; ++b) adj_j += a != b && g1.graph.adjacent(x[jsel[a]], x[jsel[b]]);
    need[a] = (p - 1) - adj_j;
    if (static_cast<int>(y[jsel[a]].size()) < need[a]) {
      return fail("index-selection", "x_" + std::to_string(jsel[a]) + " has " + std::to_string(y[jsel[a]].size()) +
                                         " ports but needs " + std::to_string(need[a]));
    }
  }

  // 4. link ports of non-adjacent branch pairs by disjoint paths in G1 - X
  struct Demand {
    int a;
    int b;
    Vertex pa;
    Vertex pb;
  };
  std::vector<Demand> demands;
  std::vector<int> next_port(p, 0);
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      if (g1.graph.adjacent(x[jsel[a]], x[jsel[b]])) continue;
      demands.push_back({a, b, y[jsel[a]][next_port[a]++], y[jsel[b]][next_port[b]++]});
    }
  }
  VertexSet ports;
  for (const auto& d : demands) {
    ports.push_back(d.pa);
    ports.push_back(d.pb);
  }
  ports = make_set(std::move(ports));
  std::vector<Path> routed(demands.size());
  bool linked = demands.empty();
  const std::size_t attempts = std::max<std::size_t>(1, 2 * demands.size());
  for (std::size_t attempt = 0; attempt < attempts && !linked; ++attempt) {
    std::vector<std::size_t> order(demands.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = (i + attempt / 2) % order.size();
    if (attempt % 2 == 1) std::reverse(order.begin(), order.end());
    std::vector<char> blocked(g1.graph.n(), 0);
    for (Vertex v : x) blocked[v] = 1;
    for (Vertex v : ports) blocked[v] = 1;
    linked = true;
    for (std::size_t di : order) {
      const Demand& d = demands[di];
      std::vector<char> allowed(g1.graph.n());
      for (Vertex v = 0; v < g1.graph.n(); ++v) allowed[v] = !blocked[v];
      allowed[d.pa] = allowed[d.pb] = 1;
      Path path = shortest_path_within(g1.graph, {d.pa}, {d.pb}, allowed);
      if (path.empty()) {
        linked = false;
        break;
      }
      for (Vertex v : path) blocked[v] = 1;
      routed[di] = std::move(path);
    }
  }
  if (!linked) return fail("linkage", "could not link the " + std::to_string(demands.size()) + " demanded port pairs");

  // 6. branch vertices and paths
  SubdivisionModel model;
  for (int a = 0; a < p; ++a) model.branch_vertices.push_back(g1.to_host[x[jsel[a]]]);
  std::size_t di = 0;
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      Path path{x[jsel[a]]};
      if (di < demands.size() && demands[di].a == a && demands[di].b == b) {
        for (Vertex v : routed[di]) path.push_back(v);
        ++di;
      }
      path.push_back(x[jsel[b]]);
      for (Vertex& v : path) v = g1.to_host[v];
      model.edge_paths.push_back({a, b, std::move(path)});
    }
  }
  if (auto bad = validate_subdivision(g, complete(p), model)) return fail("paths", "model rejected: " + *bad);
  out.model = std::move(model);
  out.stage = "done";
  return out;
}

}  // namespace bk
