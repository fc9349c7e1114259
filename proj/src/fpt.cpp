#include "bramblekit/fpt.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>

namespace bk {

namespace {

int index_in(const VertexSet& bag, Vertex v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Bottom-up pass over td rooted at node 0: children are forgotten/introduced
// into the parent bag and joined, then the edges owned by the node are added.
template <class Ops>
typename Ops::Table run_dp(const Graph& g, const TreeDecomposition& td, Ops& ops, int max_bag, const char* who) {
  if (auto bad = validate_decomposition(g, td)) throw InputError(std::string(who) + ": " + *bad);
  for (const auto& bag : td.bags) {
    if (static_cast<int>(bag.size()) > max_bag) {
      throw CapacityError(std::string(who) + ": bag of " + std::to_string(bag.size()) + " vertices exceeds cap " +
                          std::to_string(max_bag));
    }
  }
  const int nodes = static_cast<int>(td.bags.size());
  std::vector<int> order;
  std::vector<int> parent(nodes, -2);
  std::vector<std::vector<int>> children(nodes);
  parent[0] = -1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int t = q.front();
    q.pop();
    order.push_back(t);
    for (Vertex c : td.tree.neighbors(t)) {
      if (parent[c] == -2) {
        parent[c] = t;
        children[t].push_back(c);
        q.push(c);
      }
    }
  }
  std::vector<std::vector<Edge>> owned(nodes);
  for (const auto& e : g.edges()) {
    for (int t : order) {
      if (contains(td.bags[t], e.u) && contains(td.bags[t], e.v)) {
        owned[t].push_back(e);
        break;
      }
    }
  }
  std::vector<typename Ops::Table> tables(nodes);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int t = *it;
    const VertexSet& x = td.bags[t];
    typename Ops::Table cur;
    bool have = false;
    for (int c : children[t]) {
      typename Ops::Table tab = std::move(tables[c]);
      VertexSet bag = td.bags[c];
      for (Vertex v : set_difference(td.bags[c], x)) {
        tab = ops.forget(tab, bag, v);
        bag.erase(bag.begin() + index_in(bag, v));
      }
      for (Vertex v : set_difference(x, td.bags[c])) {
        tab = ops.introduce(tab, bag, v);
        bag.insert(bag.begin() + index_in(bag, v), v);
      }
      cur = have ? ops.join(cur, tab, x) : std::move(tab);
      have = true;
    }
    if (!have) {
      cur = ops.leaf();
      VertexSet bag;
      for (Vertex v : x) {
        cur = ops.introduce(cur, bag, v);
        bag.push_back(v);
      }
    }
    for (const auto& e : owned[t]) cur = ops.add_edge(cur, x, e.u, e.v);
    tables[t] = std::move(cur);
  }
  typename Ops::Table root = std::move(tables[0]);
  VertexSet bag = td.bags[0];
  while (!bag.empty()) {
    root = ops.forget(root, bag, bag.back());
    bag.pop_back();
  }
  return root;
}

// --- vertex cover: one bit per bag vertex ----------------------------------

struct VcOps {
  struct Entry {
    int value = 0;
    VertexSet cover;
  };
  using Table = std::map<std::vector<int>, Entry>;

  static void keep(Table& t, std::vector<int> key, Entry e) {
    auto it = t.find(key);
    if (it == t.end() || e.value < it->second.value) t[std::move(key)] = std::move(e);
  }

  Table leaf() { return Table{{{}, Entry{}}}; }

  Table introduce(const Table& t, const VertexSet& bag, Vertex v) {
    Table out;
    const int p = index_in(bag, v);
    for (const auto& [key, e] : t) {
      for (int bit : {0, 1}) {
        auto k = key;
        k.insert(k.begin() + p, bit);
        keep(out, std::move(k), e);
      }
    }
    return out;
  }

  Table forget(const Table& t, const VertexSet& bag, Vertex v) {
    Table out;
    const int p = index_in(bag, v);
    for (const auto& [key, e] : t) {
      auto k = key;
      Entry n = e;
      if (k[p]) {
        ++n.value;
        n.cover.push_back(v);
      }
      k.erase(k.begin() + p);
      keep(out, std::move(k), std::move(n));
    }
    return out;
  }

  Table add_edge(const Table& t, const VertexSet& bag, Vertex u, Vertex v) {
    Table out;
    const int pu = index_in(bag, u);
    const int pv = index_in(bag, v);
    for (const auto& [key, e] : t) {
      if (key[pu] || key[pv]) out.emplace(key, e);
    }
    return out;
  }

  Table join(const Table& a, const Table& b, const VertexSet&) {
    Table out;
    for (const auto& [key, e] : a) {
      auto it = b.find(key);
      if (it == b.end()) continue;
      Entry n{e.value + it->second.value, e.cover};
      n.cover.insert(n.cover.end(), it->second.cover.begin(), it->second.cover.end());
      out.emplace(key, std::move(n));
    }
    return out;
  }
};

// --- longest path: partial path systems --------------------------------------
// Per bag vertex: degree (0..2) and partner (the other end of its segment, a
// vertex id, kNone, or kOut when that end was forgotten). Trailer: forgotten
// endpoints e and a done flag once the path has both ends forgotten.

constexpr int kNone = -1;
constexpr int kOut = -2;

struct LpOps {
  struct Entry {
    int value = 0;
    std::vector<Edge> edges;
  };
  using Table = std::map<std::vector<int>, Entry>;

  static void keep(Table& t, std::vector<int> key, Entry e) {
    auto it = t.find(key);
    if (it == t.end() || e.value > it->second.value) t[std::move(key)] = std::move(e);
  }

  static bool no_loose_ends(const std::vector<int>& k) {
    for (std::size_t i = 0; i + 2 < k.size(); i += 2) {
      if (k[i] == 1) return false;
    }
    return true;
  }

  Table leaf() { return Table{{{0, 0}, Entry{}}}; }

  Table introduce(const Table& t, const VertexSet& bag, Vertex v) {
    Table out;
    const int p = index_in(bag, v);
    for (const auto& [key, e] : t) {
      auto k = key;
      k.insert(k.begin() + 2 * p, {0, kNone});
      keep(out, std::move(k), e);
    }
    return out;
  }

  Table forget(const Table& t, const VertexSet& bag, Vertex v) {
    Table out;
    const int p = index_in(bag, v);
    for (const auto& [key, e] : t) {
      auto k = key;
      int& ends = k[k.size() - 2];
      int& done = k[k.size() - 1];
      if (k[2 * p] == 1) {
        const int partner = k[2 * p + 1];
        if (partner == kOut) {
          ends = 2;
          done = 1;
          k[2 * p] = 0;
          if (!no_loose_ends(k)) continue;
        } else {
          if (ends == 2) continue;
          ++ends;
          k[2 * index_in(bag, partner) + 1] = kOut;
        }
      }
      k.erase(k.begin() + 2 * p, k.begin() + 2 * p + 2);
      keep(out, std::move(k), e);
    }
    return out;
  }

  Table add_edge(const Table& t, const VertexSet& bag, Vertex u, Vertex v) {
    Table out = t;
    const int pu = index_in(bag, u);
    const int pv = index_in(bag, v);
    for (const auto& [key, e] : t) {
      if (key.back() || key[2 * pu] == 2 || key[2 * pv] == 2) continue;
      auto k = key;
      auto deg = [&](int p) -> int& { return k[2 * p]; };
      auto mate = [&](int p) -> int& { return k[2 * p + 1]; };
      auto set_mate_of = [&](int m, int value) {
        if (m >= 0) mate(index_in(bag, m)) = value;
      };
      if (deg(pu) == 0 && deg(pv) == 0) {
        deg(pu) = deg(pv) = 1;
        mate(pu) = v;
        mate(pv) = u;
      } else if (deg(pu) == 0 || deg(pv) == 0) {
        const int fresh = deg(pu) == 0 ? pu : pv;
        const int old = fresh == pu ? pv : pu;
        const Vertex fresh_v = fresh == pu ? u : v;
        const int w = mate(old);
        deg(fresh) = 1;
        mate(fresh) = w;
        set_mate_of(w, fresh_v);
        deg(old) = 2;
        mate(old) = kNone;
      } else {
        const int a = mate(pu);
        const int b = mate(pv);
        if (a == v) continue;  // closes a cycle
        deg(pu) = deg(pv) = 2;
        mate(pu) = mate(pv) = kNone;
        set_mate_of(a, b);
        set_mate_of(b, a);
        if (a == kOut && b == kOut) {
          k.back() = 1;
          if (!no_loose_ends(k)) continue;
        }
      }
      Entry n = e;
      ++n.value;
      n.edges.push_back(make_edge(u, v));
      keep(out, std::move(k), std::move(n));
    }
    return out;
  }


  Table join(const Table& a, const Table& b, const VertexSet& bag) {
    Table out;
    for (const auto& [ka, ea] : a) {
      for (const auto& [kb, eb] : b) {
        if (auto k = merge(ka, kb, bag)) {
          Entry n{ea.value + eb.value, ea.edges};
          n.edges.insert(n.edges.end(), eb.edges.begin(), eb.edges.end());
          keep(out, std::move(*k), std::move(n));
        }
      }
    }
    return out;
  }

  static bool empty_state(const std::vector<int>& k) {
    for (std::size_t i = 0; i + 2 < k.size(); i += 2) {
      if (k[i] != 0) return false;
    }
    return k[k.size() - 2] == 0;
  }

  // Union of two edge-disjoint path systems on the same bag.
  static std::optional<std::vector<int>> merge(const std::vector<int>& ka, const std::vector<int>& kb,
                                               const VertexSet& bag) {
    const bool da = ka.back() != 0;
    const bool db = kb.back() != 0;
    if (da && db) return std::nullopt;
    if (da) return empty_state(kb) ? std::optional(ka) : std::nullopt;
    if (db) return empty_state(ka) ? std::optional(kb) : std::nullopt;
    const int ends = ka[ka.size() - 2] + kb[kb.size() - 2];
    if (ends > 2) return std::nullopt;
    const int n = static_cast<int>(bag.size());
    // segment graph: bag indices plus one token per forgotten end
    std::vector<std::vector<int>> adj(n);
    for (const auto* side : {&ka, &kb}) {
      for (int i = 0; i < n; ++i) {
        if ((*side)[2 * i] != 1) continue;
        const int partner = (*side)[2 * i + 1];
        if (partner == kOut) {
          adj.emplace_back();
          adj[i].push_back(static_cast<int>(adj.size()) - 1);
          adj.back().push_back(i);
        } else {
          const int j = index_in(bag, partner);
          if (i < j) {
            adj[i].push_back(j);
            adj[j].push_back(i);
          }
        }
      }
    }
    std::vector<int> k(ka.size(), 0);
    for (int i = 0; i < n; ++i) {
      k[2 * i] = ka[2 * i] + kb[2 * i];
      if (k[2 * i] > 2) return std::nullopt;
      k[2 * i + 1] = kNone;
    }
    k[k.size() - 2] = ends;
    std::vector<char> seen(adj.size(), 0);
    int walks = 0;
    bool done = false;
    for (int start = 0; start < static_cast<int>(adj.size()); ++start) {
      if (seen[start] || adj[start].size() != 1) continue;
      int prev = -1;
      int cur = start;
      while (true) {
        seen[cur] = 1;
        int next = -1;
        for (int w : adj[cur]) {
          if (w != prev) next = w;
        }
        if (next == -1 || (adj[cur].size() == 1 && prev != -1)) break;
        prev = cur;
        cur = next;
      }
      ++walks;
      const bool s_out = start >= n;
      const bool c_out = cur >= n;
      if (s_out && c_out) {
        done = true;
      } else if (s_out) {
        k[2 * cur + 1] = kOut;
      } else if (c_out) {
        k[2 * start + 1] = kOut;
      } else {
        k[2 * start + 1] = bag[cur];
        k[2 * cur + 1] = bag[start];
      }
    }
    for (std::size_t x = 0; x < adj.size(); ++x) {
      if (!adj[x].empty() && !seen[x]) return std::nullopt;  // cycle
    }
    if (done) {
      if (walks > 1) return std::nullopt;
      k.back() = 1;
    }
    return k;
  }
};

Path path_from_edges(int n, const std::vector<Edge>& edges) {
  if (edges.empty()) return n > 0 ? Path{0} : Path{};
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  Vertex start = edges.front().u;
  for (const auto& [v, nb] : adj) {
    if (nb.size() == 1) {
      start = v;
      break;
    }
  }
  Path p{start};
  Vertex prev = -1;
  while (true) {
    Vertex next = -1;
    for (Vertex w : adj[p.back()]) {
      if (w != prev) next = w;
    }
    if (next == -1 || (p.size() > 1 && adj[p.back()].size() == 1)) break;
    prev = p.back();
    p.push_back(next);
  }
  return p;
}

}  // namespace

WidthSolution vc_width_dp(const Graph& g, const TreeDecomposition& td, int max_bag) {
  if (g.n() == 0) return {};
  VcOps ops;
  auto root = run_dp(g, td, ops, max_bag, "vc_width_dp");
  const auto& e = root.at({});
  return {e.value, make_set(e.cover)};
}

WidthSolution longest_path_width_dp(const Graph& g, const TreeDecomposition& td, int max_bag) {
  if (g.n() == 0) return {};
  LpOps ops;
  auto root = run_dp(g, td, ops, max_bag, "longest_path_width_dp");
  const LpOps::Entry* best = nullptr;
  for (const auto& [key, e] : root) {
    if (!best || e.value > best->value) best = &e;
  }
  WidthSolution out;
  out.value = best ? best->value : 0;
  out.witness = path_from_edges(g.n(), best ? best->edges : std::vector<Edge>{});
  return out;
}

Check check_vertex_cover(const Graph& g, const std::vector<Vertex>& cover) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : cover) {
    if (!g.valid(v)) return "cover vertex out of range";
    if (in[v]) return "cover repeats vertex " + std::to_string(v);
    in[v] = 1;
  }
  for (const auto& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " uncovered";
  }
  return std::nullopt;
}

int brute_force_vertex_cover(const Graph& g) {
  const int n = g.n();
  if (n > 24) throw CapacityError("brute_force_vertex_cover: more than 24 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!(mask >> v & 1u) && (adj[v] & ~mask)) ok = false;
    }
    if (ok) best = size;
  }
  return best;
}

int brute_force_longest_path(const Graph& g) {
  const int n = g.n();
  if (n > 16) throw CapacityError("brute_force_longest_path: more than 16 vertices");
  if (n == 0) return 0;
  // reach[mask] = ends of simple paths covering exactly mask
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  int best = 0;
  for (int v = 0; v < n; ++v) reach[std::size_t{1} << v] = 1u << v;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!reach[mask]) continue;
    best = std::max(best, std::popcount(mask) - 1);
    for (int v = 0; v < n; ++v) {
      if (!(reach[mask] >> v & 1u)) continue;
      for (Vertex w : g.neighbors(v)) {
        if (!(mask >> w & 1u)) reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return best;
}

ParameterPlugin vertex_cover_plugin() {
  ParameterPlugin p;
  p.name = "vc";
  p.c = Rational(1, 4);
  p.alpha = 2;
  p.basis = "at least m(m-2) edges in the union, maximum degree 4";
  p.bramble_lower_bound = [](int m) { return m < 2 ? 0 : (m * (m - 2) + 3) / 4; };
  p.width_solver = [](const Graph& g, const TreeDecomposition& td) { return vc_width_dp(g, td); };
  p.check_witness = [](const Graph& g, const WidthSolution& s) -> Check {
    if (static_cast<int>(s.witness.size()) != s.value) return "cover size differs from the value";
    return check_vertex_cover(g, s.witness);
  };
  return p;
}

ParameterPlugin longest_path_plugin() {
  ParameterPlugin p;
  p.name = "longest-path";
  p.c = Rational(1, 2);
  p.alpha = 1;
  p.basis = "treewidth of the union at least ceil(m/2) - 1 bounds the longest path from below";
  p.bramble_lower_bound = [](int m) { return std::max(0, (m + 1) / 2 - 1); };
  p.width_solver = [](const Graph& g, const TreeDecomposition& td) { return longest_path_width_dp(g, td); };
  p.check_witness = [](const Graph& g, const WidthSolution& s) -> Check {
    if (auto bad = check_path(g, s.witness)) return bad;
    if (static_cast<int>(s.witness.size()) - 1 != s.value) return "path length differs from the value";
    return std::nullopt;
  };
  return p;
}

ParameterPlugin plugin_by_name(const std::string& name) {
  if (name == "vc") return vertex_cover_plugin();
  if (name == "longest-path") return longest_path_plugin();
  throw InputError("unknown parameter '" + name + "'");
}

DichotomyResult decide(const Graph& g, const ParameterPlugin& plugin, int k, const Constants& cfg,
                       std::uint64_t seed) {
  if (k < 0) throw InputError("decide: k must be non-negative");
  DichotomyResult out;
  out.k = k;
  int order = 1;
  while (plugin.bramble_lower_bound(2 * order) <= k) ++order;
  std::optional<TreeDecomposition> fallback;
  if (g.n() > 0 && is_connected(g)) {
    BoundedDegreeResult bd = bounded_degree_subgraph(g, order, cfg, seed);
    if (bd.bramble) {
      out.verdict = "greater";
      out.branch = "bramble";
      out.bramble_order = bd.order;
      out.bound = plugin.bramble_lower_bound(static_cast<int>(bd.bramble->elements.size()));
      out.bramble = std::move(bd.bramble);
      out.note = "perfect bramble of order " + std::to_string(bd.order) + " via " + bd.route;
      return out;
    }
    fallback = bd.pipeline.counter_witness;
    out.note = "bramble stage: " + bd.pipeline.stage + ": " + bd.pipeline.message;
  }
  TreeDecomposition td;
  if (g.n() <= cfg.exact_treewidth_cap) {
    td = exact_treewidth(g, cfg.exact_treewidth_cap).td;
  } else {
    td = approximate_treewidth(g, cfg).td;
    if (fallback && fallback->computed_width() < td.computed_width()) td = *fallback;
  }
  out.branch = "width";
  out.solution = plugin.width_solver(g, td);
  out.value = out.solution.value;
  out.verdict = out.solution.value > k ? "greater" : "at-most";
  out.decomposition = std::move(td);
  return out;
}

Check validate_dichotomy(const Graph& g, const ParameterPlugin& plugin, const DichotomyResult& r) {
  if (r.branch == "bramble") {
    if (!r.bramble) return "bramble branch without a bramble";
    if (auto bad = validate_perfect(g, *r.bramble)) return "perfect bramble: " + *bad;
    const int bound = plugin.bramble_lower_bound(static_cast<int>(r.bramble->elements.size()));
    if (bound != r.bound) return "bound differs from the plugin";
    if (bound <= r.k) return "bramble bound does not exceed k";
    if (r.verdict != "greater") return "bramble branch must report greater";
    return std::nullopt;
  }
  if (r.branch != "width") return "unknown branch";
  if (!r.value || *r.value != r.solution.value) return "value missing";
  if (r.decomposition) {
    if (auto bad = validate_decomposition(g, *r.decomposition)) return "decomposition: " + *bad;
  }
  if (auto bad = plugin.check_witness(g, r.solution)) return "witness: " + *bad;
  if ((r.verdict == "greater") != (*r.value > r.k)) return "verdict inconsistent with the value";
  return std::nullopt;
}

}  // namespace bk
