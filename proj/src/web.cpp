#include "bramblekit/web.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace bk {

namespace {

std::map<Vertex, std::vector<Vertex>> tree_adjacency(const TreeSubgraph& t) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (Vertex v : t.vertices) adj[v];
  for (const auto& e : t.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::string pair_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

Check check_tree(const Graph& g, const TreeSubgraph& t) {
  if (t.vertices.empty()) return "tree has no vertices";
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    if (!g.valid(t.vertices[i])) return "tree vertex out of range";
    if (i > 0 && t.vertices[i - 1] >= t.vertices[i]) return "tree vertices not sorted";
  }
  std::vector<Edge> sorted = t.edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "tree has a repeated edge";
  for (const auto& e : t.edges) {
    if (e.u >= e.v) return "tree edge not normalised";
    if (!contains(t.vertices, e.u) || !contains(t.vertices, e.v)) return "tree edge leaves the vertex set";
    if (!g.adjacent(e.u, e.v)) return "tree edge is not a graph edge";
  }
  if (t.edges.size() + 1 != t.vertices.size()) return "tree edge count is not |V| - 1";
  if (!is_connected_subgraph(t.vertices, t.edges)) return "tree is not connected";
  return std::nullopt;
}

int tree_degree(const TreeSubgraph& t, Vertex v) {
  int d = 0;
  for (const auto& e : t.edges) d += (e.u == v) + (e.v == v);
  return d;
}

TreeSubgraph minimal_subtree(const TreeSubgraph& t, const VertexSet& keep) {
  if (keep.empty()) throw InputError("minimal_subtree: empty keep set");
  auto adj = tree_adjacency(t);
  std::map<Vertex, int> deg;
  for (auto& [v, list] : adj) deg[v] = static_cast<int>(list.size());
  std::map<Vertex, bool> removed;
  std::vector<Vertex> queue;
  for (auto& [v, d] : deg) {
    if (d <= 1 && !contains(keep, v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    if (removed[v]) continue;
    removed[v] = true;
    for (Vertex w : adj[v]) {
      if (removed[w]) continue;
      if (--deg[w] <= 1 && !contains(keep, w)) queue.push_back(w);
    }
  }
  TreeSubgraph out;
  for (Vertex v : t.vertices) {
    if (!removed[v]) out.vertices.push_back(v);
  }
  for (const auto& e : t.edges) {
    if (!removed[e.u] && !removed[e.v]) out.edges.push_back(e);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Check validate_web(const Graph& g, const KWeb& web) {
  if (web.k < 1 || web.h < 1) return "k and h must be positive";
  if (auto bad = check_tree(g, web.tree)) return "T: " + *bad;
  for (Vertex v : web.tree.vertices) {
    if (tree_degree(web.tree, v) > 3) return "T is not sub-cubic at vertex " + std::to_string(v);
  }
  if (static_cast<int>(web.subtrees.size()) != web.h || static_cast<int>(web.flats.size()) != web.h) {
    return "expected h subtrees and h flats";
  }
  VertexSet seen;
  VertexSet flat_union;
  for (int i = 0; i < web.h; ++i) {
    const VertexSet& ti = web.subtrees[i];
    if (ti.empty() || make_set(ti) != ti) return "subtree " + std::to_string(i) + " empty or unsorted";
    if (!is_subset(ti, web.tree.vertices)) return "subtree " + std::to_string(i) + " leaves T";
    std::vector<Edge> inner;
    for (const auto& e : web.tree.edges) {
      if (contains(ti, e.u) && contains(ti, e.v)) inner.push_back(e);
    }
    if (!is_connected_subgraph(ti, inner)) return "subtree " + std::to_string(i) + " is not connected in T";
    if (intersects(seen, ti)) return "subtrees are not disjoint";
    seen = set_union(seen, ti);
    const VertexSet& ai = web.flats[i];
    if (make_set(ai) != ai) return "flat " + std::to_string(i) + " unsorted";
    if (!is_subset(ai, ti)) return "flat " + std::to_string(i) + " not inside its subtree";
    for (Vertex v : ai) {
      if (tree_degree(web.tree, v) > 2) return "flat " + std::to_string(i) + " is not flat at " + std::to_string(v);
    }
    flat_union = set_union(flat_union, ai);
  }
  if (make_set(web.body) != web.body) return "body unsorted";
  for (Vertex v : web.body) {
    if (!g.valid(v)) return "body vertex out of range";
  }
  if (set_intersection(web.body, web.tree.vertices) != flat_union) return "V(B n T) differs from the union of flats";
  std::size_t expected = static_cast<std::size_t>(web.h) * (web.h - 1) / 2;
  if (web.linkages.size() != expected) return "expected one linkage family per pair";
  std::size_t idx = 0;
  for (int i = 0; i < web.h; ++i) {
    for (int j = i + 1; j < web.h; ++j, ++idx) {
      const Linkage& L = web.linkages[idx];
      if (L.i != i || L.j != j) return "linkage families out of order";
      if (static_cast<int>(L.paths.size()) < web.k) return "fewer than k paths for pair " + pair_name(i, j);
      VertexSet used;
      for (const auto& p : L.paths) {
        if (auto bad = check_path(g, p)) return "pair " + pair_name(i, j) + ": " + *bad;
        if (!contains(web.flats[i], p.front()) || !contains(web.flats[j], p.back())) {
          return "path of pair " + pair_name(i, j) + " does not join the flats";
        }
        VertexSet pv = make_set(p);
        if (!is_subset(pv, web.body)) return "path of pair " + pair_name(i, j) + " leaves the body";
        for (std::size_t x = 1; x + 1 < p.size(); ++x) {
          if (contains(web.flats[i], p[x]) || contains(web.flats[j], p[x])) {
            return "path of pair " + pair_name(i, j) + " re-enters a flat";
          }
        }
        if (intersects(used, pv)) return "paths of pair " + pair_name(i, j) + " are not disjoint";
        used = set_union(used, pv);
      }
    }
  }
  return std::nullopt;
}

int web_width_lower_bound(const Graph& g, const KWeb& web) {
  if (auto bad = validate_web(g, web)) throw InputError("web_width_lower_bound: invalid web: " + *bad);
  return std::min(web.k, web.h) - 1;
}

std::vector<VertexSet> split_flat_subtrees(const TreeSubgraph& t, const VertexSet& x, int k, int l) {
  if (k < 1 || l < 1) throw InputError("split_flat_subtrees: k and l must be positive");
  if (static_cast<long long>(x.size()) < 2LL * k * l) throw InputError("split_flat_subtrees: |x| < 2kl");
  if (!is_subset(x, t.vertices)) throw InputError("split_flat_subtrees: x not inside the tree");
  if (t.edges.size() + 1 != t.vertices.size() || !is_connected_subgraph(t.vertices, t.edges)) {
    throw InputError("split_flat_subtrees: not a tree");
  }
  auto adj = tree_adjacency(t);
  for (auto& [v, list] : adj) {
    if (list.size() > 3) throw InputError("split_flat_subtrees: tree is not sub-cubic");
  }
  Vertex root = t.vertices.front();
  for (Vertex v : t.vertices) {
    if (adj[v].size() <= 1) {
      root = v;
      break;
    }
  }
  // iterative post-order from a leaf root
  std::map<Vertex, Vertex> parent;
  std::vector<Vertex> order;
  std::vector<Vertex> stack{root};
  parent[root] = -1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : adj[v]) {
      if (w != parent[v]) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::reverse(order.begin(), order.end());

  std::map<Vertex, VertexSet> open;
  std::vector<VertexSet> out;
  for (Vertex v : order) {
    if (static_cast<int>(out.size()) == l) break;
    VertexSet part{v};
    for (Vertex w : adj[v]) {
      if (w != parent[v]) part = set_union(part, open[w]);
    }
    int cnt = static_cast<int>(set_intersection(part, x).size());
    if (cnt < k) {
      open[v] = std::move(part);
      continue;
    }
    // trim leaves of the part until exactly k members of x remain
    while (cnt > k) {
      Vertex drop = -1;
      for (auto it = part.rbegin(); it != part.rend(); ++it) {
        int d = 0;
        for (Vertex w : adj[*it]) d += contains(part, w);
        if (d <= 1) {
          drop = *it;
          break;
        }
      }
      cnt -= contains(x, drop);
      part.erase(std::lower_bound(part.begin(), part.end(), drop));
    }
    out.push_back(std::move(part));
    open[v] = {};
  }
  if (static_cast<int>(out.size()) < l) throw std::logic_error("split_flat_subtrees: not enough subtrees");
  return out;
}

namespace {

struct PendingComponent {
  VertexSet c;
  VertexSet nbr;
  TreeSubgraph tree;
  int bag = 0;
};

class PreWeb {
 public:
  PreWeb(const Graph& g, int k, int h, const Constants& cfg, WebStats* stats)
      : g_(g), k_(k), h_(h), l_(2 * k * h), cfg_(cfg), stats_(stats), in_u_(g.n(), 0) {}

  // Runs on one connected component; returns a web or fills bags/edges.
  std::optional<KWeb> run(const VertexSet& comp) {
    bags_.clear();
    edges_.clear();
    pending_.clear();
    Vertex v0 = comp.front();
    u_ = {v0};
    in_u_[v0] = 1;
    bags_.push_back({v0});
    for (auto& c : components_within(g_, set_difference(comp, u_))) {
      PendingComponent pc;
      pc.nbr = neighborhood(g_, c);
      pc.c = std::move(c);
      pc.tree.vertices = {v0};
      pc.bag = 0;
      pending_.push_back(std::move(pc));
    }
    debug_check(comp);
    while (!pending_.empty()) {
      if (stats_) ++stats_->iterations;
      std::size_t pick = 0;
      for (std::size_t i = 1; i < pending_.size(); ++i) {
        const auto& a = pending_[i];
        const auto& b = pending_[pick];
        if (a.bag > b.bag || (a.bag == b.bag && a.c.front() < b.c.front())) pick = i;
      }
      PendingComponent cur = std::move(pending_[pick]);
      pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(pick));
      const std::size_t before = u_.size();
      const int x_size = static_cast<int>(cur.nbr.size());
      if (x_size <= l_ - 1) {
        grow(cur);
      } else if (x_size == l_) {
        if (auto web = split(cur)) return web;
      } else {
        throw std::logic_error("pre-web: neighbourhood larger than l");
      }
      if (u_.size() <= before) throw std::logic_error("pre-web: order did not increase");
      debug_check(comp);
    }
    return std::nullopt;
  }

  TreeDecomposition decomposition() const { return make_decomposition(bags_, edges_); }

 private:
  int add_bag(VertexSet bag, int parent) {
    bags_.push_back(make_set(std::move(bag)));
    int id = static_cast<int>(bags_.size()) - 1;
    edges_.push_back(make_edge(parent, id));
    return id;
  }

  void add_to_u(const VertexSet& s) {
    for (Vertex v : s) in_u_[v] = 1;
    u_ = set_union(u_, s);
  }

  void grow(const PendingComponent& cur) {
    if (stats_) ++stats_->growth_steps;
    const TreeSubgraph& t = cur.tree;
    Vertex v = -1;
    for (Vertex x : cur.nbr) {
      if (contains(t.vertices, x) && tree_degree(t, x) <= 1) {
        v = x;
        break;
      }
    }
    if (v < 0) throw std::logic_error("pre-web: tree has no leaf in N(C)");
    Vertex u = -1;
    for (Vertex w : g_.neighbors(v)) {
      if (contains(cur.c, w)) {
        u = w;
        break;
      }
    }
    if (u < 0) throw std::logic_error("pre-web: leaf has no neighbour in C");
    VertexSet bag = cur.nbr;
    bag.push_back(u);
    int s = add_bag(std::move(bag), cur.bag);
    add_to_u({u});
    TreeSubgraph grown = t;
    grown.vertices = set_union(grown.vertices, {u});
    grown.edges.push_back(make_edge(u, v));
    std::sort(grown.edges.begin(), grown.edges.end());
    for (auto& c2 : components_within(g_, set_difference(cur.c, {u}))) {
      PendingComponent pc;
      pc.nbr = neighborhood(g_, c2);
      pc.tree = minimal_subtree(grown, pc.nbr);
      pc.c = std::move(c2);
      pc.bag = s;
      pending_.push_back(std::move(pc));
    }
  }

  std::optional<KWeb> split(const PendingComponent& cur) {
    if (stats_) ++stats_->split_steps;
    const VertexSet& x = cur.nbr;
    std::vector<VertexSet> parts = split_flat_subtrees(cur.tree, x, k_, h_);
    std::vector<VertexSet> flats;
    for (const auto& p : parts) flats.push_back(set_intersection(p, x));

    std::vector<Linkage> linkages;
    for (int i = 0; i < h_; ++i) {
      for (int j = i + 1; j < h_; ++j) {
        VertexSet ends = set_union(flats[i], flats[j]);
        VertexSet verts = set_union(cur.c, ends);
        std::vector<int> local(g_.n(), -1);
        for (std::size_t q = 0; q < verts.size(); ++q) local[verts[q]] = static_cast<int>(q);
        std::vector<Edge> hedges;
        for (Vertex a : verts) {
          for (Vertex b : g_.neighbors(a)) {
            if (b <= a || local[b] < 0) continue;
            if (contains(ends, a) && contains(ends, b)) continue;  // E(G[A_i u A_j]) removed
            hedges.push_back({local[a], local[b]});
          }
        }
        Graph hgraph(static_cast<int>(verts.size()), std::move(hedges));
        auto to_local = [&](const VertexSet& s) {
          VertexSet out;
          for (Vertex v : s) out.push_back(local[v]);
          return make_set(std::move(out));
        };
        DisjointPaths dp = disjoint_paths(hgraph, to_local(flats[i]), to_local(flats[j]));
        std::vector<Path> paths;
        for (const auto& p : dp.paths) {
          Path hp;
          for (Vertex v : p) hp.push_back(verts[v]);
          paths.push_back(std::move(hp));
        }
        if (static_cast<int>(paths.size()) < k_) {
          VertexSet sep;
          for (Vertex v : dp.separator) sep.push_back(verts[v]);
          refine_with_separator(cur, flats[i], flats[j], make_set(std::move(sep)), paths);
          return std::nullopt;
        }
        paths.resize(k_);
        linkages.push_back({i, j, std::move(paths)});
      }
    }
    KWeb web;
    web.k = k_;
    web.h = h_;
    web.tree = cur.tree;
    web.subtrees = std::move(parts);
    web.flats = std::move(flats);
    web.body = cur.c;
    for (const auto& a : web.flats) web.body = set_union(web.body, a);
    web.linkages = std::move(linkages);
    return web;
  }

  void refine_with_separator(const PendingComponent& cur, const VertexSet& ai, const VertexSet& aj,
                             const VertexSet& sep, const std::vector<Path>& paths) {
    VertexSet xs = set_union(cur.nbr, sep);
    int r = add_bag(xs, cur.bag);
    VertexSet new_u = set_intersection(sep, cur.c);
    add_to_u(new_u);
    const VertexSet ai_free = set_difference(ai, sep);
    const VertexSet aj_free = set_difference(aj, sep);
    for (auto& c2 : components_within(g_, set_difference(cur.c, sep))) {
      PendingComponent pc;
      pc.nbr = neighborhood(g_, c2);
      bool from_i = !intersects(pc.nbr, ai_free);
      if (!from_i && intersects(pc.nbr, aj_free)) {
        throw std::logic_error("pre-web: component sees both flats past the separator");
      }
      TreeSubgraph t = cur.tree;
      for (Vertex s : set_intersection(new_u, pc.nbr)) {
        const Path* ps = nullptr;
        for (const auto& p : paths) {
          if (std::find(p.begin(), p.end(), s) != p.end()) ps = &p;
        }
        if (!ps) throw std::logic_error("pre-web: separator vertex on no path");
        auto at = std::find(ps->begin(), ps->end(), s);
        Path sub = from_i ? Path(ps->begin(), at + 1) : Path(at, ps->end());
        t.vertices = set_union(t.vertices, make_set(sub));
        for (const auto& e : path_edges(sub)) t.edges.push_back(e);
      }
      std::sort(t.edges.begin(), t.edges.end());
      t.edges.erase(std::unique(t.edges.begin(), t.edges.end()), t.edges.end());
      pc.tree = minimal_subtree(t, pc.nbr);
      pc.c = std::move(c2);
      pc.bag = r;
      pending_.push_back(std::move(pc));
    }
  }

  void debug_check(const VertexSet& comp) const {
    if (!cfg_.debug_validate) return;
    auto fail = [](const std::string& what) { throw std::logic_error("pre-web invariant: " + what); };
    Subgraph gu = induced_subgraph(g_, u_);
    std::vector<int> local(g_.n(), -1);
    for (std::size_t i = 0; i < u_.size(); ++i) local[u_[i]] = static_cast<int>(i);
    std::vector<VertexSet> lb;
    for (const auto& b : bags_) {
      VertexSet m;
      for (Vertex v : b) {
        if (local[v] < 0) fail("bag leaves U");
        m.push_back(local[v]);
      }
      lb.push_back(make_set(std::move(m)));
    }
    TreeDecomposition td = make_decomposition(lb, edges_);
    if (auto bad = validate_decomposition(gu.graph, td)) fail("decomposition of G[U]: " + *bad);
    if (td.width > l_ + k_ - 2) fail("width above l + k - 2");
    VertexSet rest = set_difference(comp, u_);
    VertexSet covered;
    for (const auto& pc : pending_) {
      if (!is_connected_set(g_, pc.c)) fail("component not connected");
      covered = set_union(covered, pc.c);
      if (pc.nbr != neighborhood(g_, pc.c)) fail("stale neighbourhood");
      if (!is_subset(pc.nbr, bags_[pc.bag])) fail("no bag holds N(C)");
      if (check_tree(g_, pc.tree)) fail("T_C is not a tree");
      if (intersects(pc.tree.vertices, pc.c)) fail("T_C meets C");
      for (Vertex v : pc.tree.vertices) {
        if (tree_degree(pc.tree, v) > 3) fail("T_C not sub-cubic");
      }
      if (!is_subset(pc.nbr, pc.tree.vertices)) fail("N(C) not in T_C");
      for (Vertex v : pc.nbr) {
        if (tree_degree(pc.tree, v) > 2) fail("N(C) not flat");
      }
      bool leaf = false;
      for (Vertex v : pc.nbr) leaf = leaf || tree_degree(pc.tree, v) <= 1;
      if (pc.tree.vertices.size() == 1) leaf = is_subset(pc.tree.vertices, pc.nbr);
      if (!leaf) fail("T_C has no leaf in N(C)");
    }
    if (covered != rest) fail("pending components do not partition V \\ U");
  }

  const Graph& g_;
  int k_;
  int h_;
  int l_;
  const Constants& cfg_;
  WebStats* stats_;
  std::vector<char> in_u_;
  VertexSet u_;
  std::vector<VertexSet> bags_;
  std::vector<Edge> edges_;
  std::vector<PendingComponent> pending_;
};

}  // namespace

WebOrDecomposition build_web_or_decomposition(const Graph& g, int k, int h, const Constants& cfg,
                                              WebStats* stats) {
  if (k < 1 || h < 1) throw InputError("build_web_or_decomposition: k and h must be positive");
  std::vector<TreeDecomposition> parts;
  PreWeb pw(g, k, h, cfg, stats);
  for (const auto& comp : components(g)) {
    if (auto web = pw.run(comp)) return std::move(*web);
    parts.push_back(pw.decomposition());
  }
  return join_decompositions(parts);
}

}  // namespace bk
