#include "bramblekit/perfect.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bramblekit/decomposition.hpp"
#include "bramblekit/generators.hpp"

namespace bk {

namespace {

bool edge_less(const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); }

std::vector<Edge> edge_set(std::vector<Edge> edges) {
  for (auto& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end(), edge_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

void add_path(VertexSet& vs, std::vector<Edge>& es, const Path& p) {
  vs.insert(vs.end(), p.begin(), p.end());
  for (const auto& e : path_edges(p)) es.push_back(e);
}

PerfectBramble finish(std::vector<VertexSet> vs, std::vector<std::vector<Edge>> es) {
  PerfectBramble pb;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    pb.elements.push_back(make_set(std::move(vs[i])));
    pb.edges.push_back(edge_set(std::move(es[i])));
  }
  pb.order = OrderCertificate{static_cast<int>((pb.elements.size() + 1) / 2), OrderMethod::Structural};
  return pb;
}

int ceil_half(int k) { return (k + 1) / 2; }

}  // namespace

Graph HostUnion::local() const {
  std::vector<Edge> local_edges;
  for (const auto& e : edges) {
    auto a = std::lower_bound(vertices.begin(), vertices.end(), e.u) - vertices.begin();
    auto b = std::lower_bound(vertices.begin(), vertices.end(), e.v) - vertices.begin();
    local_edges.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
  }
  return Graph(static_cast<int>(vertices.size()), std::move(local_edges));
}

HostUnion host_union(const PerfectBramble& pb) {
  HostUnion h;
  for (const auto& e : pb.elements) h.vertices.insert(h.vertices.end(), e.begin(), e.end());
  for (const auto& es : pb.edges) h.edges.insert(h.edges.end(), es.begin(), es.end());
  h.vertices = make_set(std::move(h.vertices));
  h.edges = edge_set(std::move(h.edges));
  return h;
}

Check validate_perfect(const Graph& g, const PerfectBramble& pb) {
  if (pb.edges.size() != pb.elements.size()) return "expected one edge list per element";
  std::vector<int> count(g.n(), 0);
  for (std::size_t i = 0; i < pb.elements.size(); ++i) {
    const auto& el = pb.elements[i];
    const std::string name = "element " + std::to_string(i);
    if (el.empty() || make_set(el) != el) return name + " empty or unsorted";
    for (Vertex v : el) {
      if (!g.valid(v)) return name + " has a vertex out of range";
      if (++count[v] > 2) return "vertex " + std::to_string(v) + " lies in more than two elements";
    }
    for (const auto& e : pb.edges[i]) {
      if (!g.valid(e.u) || !g.valid(e.v) || !g.adjacent(e.u, e.v)) return name + " has a non-edge";
      if (!contains(el, e.u) || !contains(el, e.v)) return name + " has an edge leaving it";
    }
    if (!is_connected_subgraph(el, pb.edges[i])) return name + " is not connected";
    for (std::size_t j = 0; j < i; ++j) {
      if (!intersects(el, pb.elements[j])) {
        return "elements " + std::to_string(j) + " and " + std::to_string(i) + " do not intersect";
      }
    }
  }
  HostUnion h = host_union(pb);
  std::map<Vertex, int> deg;
  for (const auto& e : h.edges) {
    if (++deg[e.u] > 4) return "vertex " + std::to_string(e.u) + " has degree above 4 in the union";
    if (++deg[e.v] > 4) return "vertex " + std::to_string(e.v) + " has degree above 4 in the union";
  }
  if (pb.order && pb.order->lower_bound > ceil_half(static_cast<int>(pb.elements.size()))) {
    return "claimed order exceeds ceil(k/2)";
  }
  return std::nullopt;
}

PerfectBramble perfect_from_gridlike(const Graph& g, const GridLikeMinor& glm) {
  if (auto bad = validate_gridlike(g, glm)) throw InputError("perfect_from_gridlike: " + *bad);
  MinorModel model;
  if (glm.model) {
    model = *glm.model;
  } else {
    for (Vertex b : glm.subdivision->branch_vertices) model.branch_sets.push_back({b});
    for (const auto& ep : glm.subdivision->edge_paths) {
      int low = std::min(ep.a, ep.b);
      for (std::size_t x = 1; x + 1 < ep.path.size(); ++x) model.branch_sets[low].push_back(ep.path[x]);
    }
  }
  const int nleft = static_cast<int>(glm.ig.left.size());
  std::vector<VertexSet> vs(model.branch_sets.size());
  std::vector<std::vector<Edge>> es(model.branch_sets.size());
  for (std::size_t j = 0; j < model.branch_sets.size(); ++j) {
    for (Vertex node : model.branch_sets[j]) {
      const Path& p = node < nleft ? glm.ig.left[node] : glm.ig.right[node - nleft];
      add_path(vs[j], es[j], p);
    }
  }
  return finish(std::move(vs), std::move(es));
}

PerfectBramble perfect_from_k2k_model(const Graph& g, const CliqueLinkage& cl) {
  const int m = static_cast<int>(cl.trees.size());
  if (m < 1) throw InputError("perfect_from_k2k_model: no trees");
  if (static_cast<int>(cl.qpaths.size()) != m * (m - 1) / 2) {
    throw InputError("perfect_from_k2k_model: expected one path per pair of trees");
  }
  std::vector<VertexSet> attach(m);
  std::vector<VertexSet> vs(m);
  std::vector<std::vector<Edge>> es(m);
  for (const auto& q : cl.qpaths) {
    if (q.i < 0 || q.j <= q.i || q.j >= m || q.paths.size() != 1 || q.paths[0].empty()) {
      throw InputError("perfect_from_k2k_model: malformed path family");
    }
    const Path& p = q.paths[0];
    if (auto bad = check_path(g, p)) throw InputError("perfect_from_k2k_model: " + *bad);
    if (!contains(cl.trees[q.i].vertices, p.front()) || !contains(cl.trees[q.j].vertices, p.back())) {
      throw InputError("perfect_from_k2k_model: path does not join its trees");
    }
    attach[q.i].push_back(p.front());
    attach[q.j].push_back(p.back());
    const std::size_t half = p.size() / 2;  // ceil(len / 2), len in edges
    add_path(vs[q.i], es[q.i], Path(p.begin(), p.begin() + half + 1));
    add_path(vs[q.j], es[q.j], Path(p.begin() + half, p.end()));
  }
  for (int i = 0; i < m; ++i) {
    if (auto bad = check_tree(g, cl.trees[i])) throw InputError("perfect_from_k2k_model: tree: " + *bad);
    TreeSubgraph t = attach[i].empty() ? TreeSubgraph{{cl.trees[i].vertices.front()}, {}}
                                       : minimal_subtree(cl.trees[i], make_set(attach[i]));
    vs[i].insert(vs[i].end(), t.vertices.begin(), t.vertices.end());
    es[i].insert(es[i].end(), t.edges.begin(), t.edges.end());
  }
  return finish(std::move(vs), std::move(es));
}

StructureReport check_perfect_structure(const PerfectBramble& pb, const Constants& cfg) {
  StructureReport r;
  const int k = static_cast<int>(pb.elements.size());
  r.k = k;
  std::string notes;
  // (i)
  r.vertices_per_element = true;
  for (const auto& el : pb.elements) r.vertices_per_element = r.vertices_per_element && static_cast<int>(el.size()) >= k - 1;
  // (ii)
  std::map<std::pair<Vertex, Vertex>, int> edge_count;
  for (const auto& es : pb.edges) {
    for (const auto& e : es) ++edge_count[{e.u, e.v}];
  }
  r.private_edges = true;
  for (const auto& es : pb.edges) {
    int own = 0;
    for (const auto& e : es) own += edge_count[{e.u, e.v}] == 1;
    r.private_edges = r.private_edges && own >= k - 2;
  }
  // (iii)
  HostUnion h = host_union(pb);
  const long long nv = static_cast<long long>(h.vertices.size());
  const long long ne = static_cast<long long>(h.edges.size());
  r.union_size = 2 * nv >= static_cast<long long>(k) * (k - 1) && ne >= static_cast<long long>(k) * (k - 2);
  notes += "|V(H)| = " + std::to_string(nv) + ", |E(H)| = " + std::to_string(ne);
  // (iv) vertices with the same membership are interchangeable for hitting
  std::map<Vertex, std::vector<int>> member;
  for (int i = 0; i < k; ++i) {
    for (Vertex v : pb.elements[i]) member[v].push_back(i);
  }
  std::map<std::vector<int>, Vertex> representative;
  for (const auto& [v, sig] : member) representative.emplace(sig, v);
  std::set<Vertex> keep;
  for (const auto& [sig, v] : representative) keep.insert(v);
  Bramble reduced;
  for (const auto& el : pb.elements) {
    VertexSet e;
    for (Vertex v : el) {
      if (keep.count(v)) e.push_back(v);
    }
    reduced.elements.push_back(std::move(e));
  }
  if (k > 0) {
    try {
      r.order = bramble_order_exact(reduced, cfg).order;
      r.exact_order = r.order == ceil_half(k);
    } catch (const CapacityError& e) {
      notes += "; order: " + std::string(e.what());
    }
  } else {
    r.order = 0;
    r.exact_order = true;
  }
  // (v)
  Graph hl = h.local();
  if (hl.n() <= cfg.exact_treewidth_cap) {
    r.treewidth_value = exact_treewidth(hl, cfg.exact_treewidth_cap).width;
    r.treewidth = *r.treewidth_value >= ceil_half(k) - 1;
  } else {
    r.treewidth = true;
    notes += "; treewidth skipped, |V(H)| above the exact cap";
  }
  r.details = notes;
  return r;
}

BoundedDegreeResult bounded_degree_subgraph(const Graph& g, int order, const Constants& cfg, std::uint64_t seed) {
  if (order < 1) throw InputError("bounded_degree_subgraph: order must be positive");
  const int h = 2 * order;
  const long long hp = static_cast<long long>(h) * h * h * h;
  long long k = std::max<long long>(static_cast<long long>(h) * (h - 1) / 2, 1);
  const Rational scaled = cfg.c_web * Rational(hp);
  k = std::max<long long>(k, (scaled.numerator() + scaled.denominator() - 1) / scaled.denominator());
  BoundedDegreeResult out;
  out.pipeline = web_minor_stages(g, h, h, static_cast<int>(k), cfg, seed);
  if (out.pipeline.gridlike) {
    out.bramble = perfect_from_gridlike(g, *out.pipeline.gridlike);
    out.route = "gridlike";
  } else if (out.pipeline.linkage) {
    out.bramble = perfect_from_k2k_model(g, *out.pipeline.linkage);
    out.route = "clique-minor";
  } else {
    out.route = "failure";
    return out;
  }
  if (auto bad = validate_perfect(g, *out.bramble)) {
    throw std::logic_error("bounded_degree_subgraph: constructed bramble rejected: " + *bad);
  }
  out.host = host_union(*out.bramble);
  out.order = out.bramble->order->lower_bound;
  return out;
}

}  // namespace bk
