#include "bramblekit/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <sstream>

namespace bk {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InputError("negative vertex count");
  for (auto& e : edges_) {
    if (!valid(e.u) || !valid(e.v)) {
      throw InputError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("duplicate edge");
  }
  adj_.assign(n_, {});
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::from_pairs(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back(make_edge(a, b));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges));
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (!valid(a) || !valid(b)) return false;
  const auto& l = adj_[a];
  return std::binary_search(l.begin(), l.end(), b);
}

VertexSet make_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i;
    else ++j;
  }
  return false;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet all_vertices(const Graph& g) {
  VertexSet s(g.n());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

void require_valid_set(const Graph& g, const VertexSet& s, const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!g.valid(s[i])) {
      throw InputError(std::string(what) + ": vertex " + std::to_string(s[i]) + " out of range");
    }
    if (i > 0 && s[i - 1] >= s[i]) {
      throw InputError(std::string(what) + ": vertex set not sorted/unique");
    }
  }
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& u) {
  require_valid_set(g, u, "induced_subgraph");
  std::vector<int> local(g.n(), -1);
  for (std::size_t i = 0; i < u.size(); ++i) local[u[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back(make_edge(local[e.u], local[e.v]));
  }
  return Subgraph{Graph(static_cast<int>(u.size()), std::move(edges)), u};
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& allowed) {
  std::vector<char> ok(g.n(), 0);
  for (Vertex v : allowed) ok[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s : allowed) {
    if (ok[s] != 1) continue;
    VertexSet comp;
    ok[s] = 2;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (ok[w] == 1) {
          ok[w] = 2;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  // `allowed` is sorted, so components come out ordered by minimum member.
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  return components_within(g, set_difference(all_vertices(g), make_set(removed)));
}

bool is_connected_set(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  return components_within(g, s).size() == 1;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (!contains(s, w)) out.push_back(w);
    }
  }
  return make_set(std::move(out));
}

bool is_connected_subgraph(const VertexSet& vertices, std::span<const Edge> edges) {
  if (vertices.empty()) return false;
  std::vector<int> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index = [&](Vertex v) -> int {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return -1;
    return static_cast<int>(it - vertices.begin());
  };
  std::size_t groups = vertices.size();
  for (const auto& e : edges) {
    int a = index(e.u);
    int b = index(e.v);
    if (a < 0 || b < 0) return false;
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --groups;
    }
  }
  return groups == 1;
}

Check check_path(const Graph& g, const Path& p) {
  if (p.empty()) return "empty path";
  std::vector<Vertex> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "path repeats a vertex";
  }
  for (Vertex v : p) {
    if (!g.valid(v)) return "path vertex " + std::to_string(v) + " out of range";
  }
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!g.adjacent(p[i - 1], p[i])) {
      return "path step " + std::to_string(p[i - 1]) + "-" + std::to_string(p[i]) +
             " is not an edge";
    }
  }
  return std::nullopt;
}

std::vector<Edge> path_edges(const Path& p) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(make_edge(p[i - 1], p[i]));
  return out;
}

Path shortest_path_within(const Graph& g, const VertexSet& sources, const VertexSet& targets,
                          const std::vector<char>& allowed) {
  std::vector<int> prev(g.n(), -2);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (allowed[s] && prev[s] == -2) {
      prev[s] = -1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (contains(targets, v)) {
      Path p;
      for (Vertex x = v; x != -1; x = prev[x]) p.push_back(x);
      std::reverse(p.begin(), p.end());
      return p;
    }
    for (Vertex w : g.neighbors(v)) {
      if (allowed[w] && prev[w] == -2) {
        prev[w] = v;
        queue.push_back(w);
      }
    }
  }
  return {};
}

Check validate_minor_model(const Graph& host, const Graph& templ, const MinorModel& model) {
  if (static_cast<int>(model.branch_sets.size()) != templ.n()) {
    return "minor model has " + std::to_string(model.branch_sets.size()) +
           " branch sets, template has " + std::to_string(templ.n()) + " vertices";
  }
  std::vector<int> owner(host.n(), -1);
  for (std::size_t i = 0; i < model.branch_sets.size(); ++i) {
    const auto& bs = model.branch_sets[i];
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (!host.valid(bs[j])) return "branch set " + std::to_string(i) + " has invalid vertex";
      if (j > 0 && bs[j - 1] >= bs[j]) return "branch set " + std::to_string(i) + " not sorted";
      if (owner[bs[j]] >= 0) {
        return "branch sets " + std::to_string(owner[bs[j]]) + " and " + std::to_string(i) +
               " share vertex " + std::to_string(bs[j]);
      }
      owner[bs[j]] = static_cast<int>(i);
    }
    if (!is_connected_set(host, bs)) return "branch set " + std::to_string(i) + " not connected";
  }
  for (const auto& e : templ.edges()) {
    bool found = false;
    for (Vertex v : model.branch_sets[e.u]) {
      for (Vertex w : host.neighbors(v)) {
        if (owner[w] == e.v) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      return "no host edge between branch sets " + std::to_string(e.u) + " and " +
             std::to_string(e.v);
    }
  }
  return std::nullopt;
}

Check validate_subdivision(const Graph& host, const Graph& templ, const SubdivisionModel& model) {
  if (static_cast<int>(model.branch_vertices.size()) != templ.n()) {
    return "subdivision has wrong number of branch vertices";
  }
  std::vector<int> used(host.n(), -1);
  for (std::size_t i = 0; i < model.branch_vertices.size(); ++i) {
    Vertex b = model.branch_vertices[i];
    if (!host.valid(b)) return "branch vertex out of range";
    if (used[b] >= 0) return "branch vertex " + std::to_string(b) + " reused";
    used[b] = static_cast<int>(i);
  }
  if (model.edge_paths.size() != templ.m()) return "subdivision has wrong number of edge paths";
  std::vector<Edge> seen;
  for (const auto& ep : model.edge_paths) {
    if (ep.a < 0 || ep.b < 0 || ep.a >= templ.n() || ep.b >= templ.n() ||
        !templ.adjacent(ep.a, ep.b)) {
      return "edge path for a non-edge of the template";
    }
    seen.push_back(make_edge(ep.a, ep.b));
    if (auto c = check_path(host, ep.path)) return "edge path " + *c;
    if (ep.path.size() < 2) return "edge path too short";
    if (ep.path.front() != model.branch_vertices[ep.a] ||
        ep.path.back() != model.branch_vertices[ep.b]) {
      return "edge path " + std::to_string(ep.a) + "-" + std::to_string(ep.b) +
             " does not join its branch vertices";
    }
    for (std::size_t i = 1; i + 1 < ep.path.size(); ++i) {
      Vertex v = ep.path[i];
      if (used[v] >= 0) {
        return "internal vertex " + std::to_string(v) + " of edge path " + std::to_string(ep.a) +
               "-" + std::to_string(ep.b) + " is already used";
      }
      used[v] = templ.n();
    }
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    return "template edge embedded twice";
  }
  return std::nullopt;
}

namespace {

/// Unit-vertex-capacity max flow on the split graph; arcs are created in
/// ascending vertex order so augmentations are reproducible.
class SplitFlow {
 public:
  static constexpr int kInf = 1 << 29;

  SplitFlow(const Graph& g, const std::vector<int>& vertex_cap)
      : n_(g.n()), source_(2 * g.n()), sink_(2 * g.n() + 1), head_(2 * g.n() + 2) {
    for (Vertex v = 0; v < n_; ++v) vertex_arc_.push_back(add_arc(in(v), out(v), vertex_cap[v]));
    for (Vertex v = 0; v < n_; ++v) {
      if (vertex_cap[v] == 0) continue;
      for (Vertex w : g.neighbors(v)) {
        if (vertex_cap[w] > 0) add_arc(out(v), in(w), kInf);
      }
    }
  }

  int in(Vertex v) const { return 2 * v; }
  int out(Vertex v) const { return 2 * v + 1; }
  int source() const { return source_; }
  int sink() const { return sink_; }

  int add_arc(int from, int to, int cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    to_.push_back(from);
    cap_.push_back(0);
    head_[from].push_back(id);
    head_[to].push_back(id + 1);
    return id;
  }

  int max_flow() {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(source_);
      via[source_] = -2;
      while (!q.empty() && via[sink_] == -1) {
        int x = q.front();
        q.pop();
        for (int a : head_[x]) {
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            q.push(to_[a]);
          }
        }
      }
      if (via[sink_] == -1) break;
      for (int x = sink_; x != source_; x = to_[via[x] ^ 1]) {
        cap_[via[x]] -= 1;
        cap_[via[x] ^ 1] += 1;
      }
      ++flow;
    }
    return flow;
  }

  std::vector<char> reachable() const {
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> q;
    q.push(source_);
    seen[source_] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int a : head_[x]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          q.push(to_[a]);
        }
      }
    }
    return seen;
  }

  /// Flow carried by forward arc `a` (flow == reverse residual).
  int flow_on(int a) const { return cap_[a ^ 1]; }

  std::vector<std::vector<Vertex>> decompose() {
    std::vector<int> used(to_.size(), 0);
    std::vector<std::vector<Vertex>> paths;
    for (int a : head_[source_]) {
      if ((a & 1) || flow_on(a) - used[a] <= 0) continue;
      while (flow_on(a) - used[a] > 0) {
        used[a] += 1;
        std::vector<Vertex> p;
        int x = to_[a];
        while (x != sink_) {
          int next = -1;
          for (int b : head_[x]) {
            if ((b & 1) == 0 && flow_on(b) - used[b] > 0) {
              next = b;
              break;
            }
          }
          used[next] += 1;
          if (x % 2 == 0) p.push_back(x / 2);
          x = to_[next];
        }
        paths.push_back(std::move(p));
      }
    }
    return paths;
  }

  int vertex_arc(Vertex v) const { return vertex_arc_[v]; }
  int vertex_residual(Vertex v) const { return cap_[vertex_arc_[v]]; }
  int vertex_capacity(Vertex v) const {
    return cap_[vertex_arc_[v]] + cap_[vertex_arc_[v] ^ 1];
  }

 private:
  int n_;
  int source_;
  int sink_;
  std::vector<std::vector<int>> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> vertex_arc_;
};

}  // namespace

DisjointPaths disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b,
                             const VertexSet& internal_forbidden) {
  require_valid_set(g, a, "disjoint_paths(a)");
  require_valid_set(g, b, "disjoint_paths(b)");
  require_valid_set(g, internal_forbidden, "disjoint_paths(forbidden)");
  if (a.empty() || b.empty()) throw InputError("disjoint_paths: empty terminal set");
  if (intersects(internal_forbidden, a) || intersects(internal_forbidden, b)) {
    throw InputError("disjoint_paths: forbidden set meets terminals");
  }
  std::vector<int> cap(g.n(), 1);
  for (Vertex v : internal_forbidden) cap[v] = 0;
  SplitFlow net(g, cap);
  for (Vertex v : a) net.add_arc(net.source(), net.in(v), SplitFlow::kInf);
  for (Vertex v : b) net.add_arc(net.out(v), net.sink(), SplitFlow::kInf);
  net.max_flow();

  DisjointPaths result;
  for (auto& p : net.decompose()) {
    // Trim to an a-b path whose interior avoids a and b: cut at the first b
    // vertex, then start from the last a vertex before it.
    std::size_t last = 0;
    while (!contains(b, p[last])) ++last;
    std::size_t first = last;
    while (!contains(a, p[first])) --first;
    result.paths.emplace_back(p.begin() + static_cast<std::ptrdiff_t>(first),
                              p.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  }
  auto seen = net.reachable();
  for (Vertex v = 0; v < g.n(); ++v) {
    if (cap[v] > 0 && seen[net.in(v)] && !seen[net.out(v)]) result.separator.push_back(v);
  }
  std::sort(result.paths.begin(), result.paths.end());
  return result;
}

VertexSet min_vertex_cut(const Graph& g, Vertex x, Vertex y, const VertexSet& allowed) {
  if (x == y || g.adjacent(x, y)) throw InputError("min_vertex_cut: terminals adjacent");
  VertexSet na;
  VertexSet nb;
  for (Vertex w : g.neighbors(x)) {
    if (contains(allowed, w)) na.push_back(w);
  }
  for (Vertex w : g.neighbors(y)) {
    if (contains(allowed, w)) nb.push_back(w);
  }
  if (na.empty() || nb.empty()) return {};
  VertexSet forbidden = set_difference(all_vertices(g), allowed);
  forbidden = set_union(forbidden, make_set({x, y}));
  forbidden = set_difference(set_difference(forbidden, na), nb);
  return disjoint_paths(g, na, nb, forbidden).separator;
}

}  // namespace bk
