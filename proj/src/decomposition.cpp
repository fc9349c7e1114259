#include "bramblekit/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace bk {

int TreeDecomposition::computed_width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

TreeDecomposition make_decomposition(std::vector<VertexSet> bags, std::vector<Edge> tree_edges) {
  TreeDecomposition td;
  for (auto& b : bags) b = make_set(std::move(b));
  int nodes = static_cast<int>(bags.size());
  td.bags = std::move(bags);
  td.tree = Graph(nodes, std::move(tree_edges));
  td.width = td.computed_width();
  return td;
}

Check validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int t = static_cast<int>(td.bags.size());
  if (t == 0) return "decomposition has no bags";
  if (td.tree.n() != t) return "tree node count differs from bag count";
  if (static_cast<int>(td.tree.m()) != t - 1 || !is_connected(td.tree)) return "tree is not a tree";
  for (int i = 0; i < t; ++i) {
    const auto& b = td.bags[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!g.valid(b[j])) return "bag " + std::to_string(i) + " has invalid vertex";
      if (j > 0 && b[j - 1] >= b[j]) return "bag " + std::to_string(i) + " not sorted";
    }
  }
  // (i) vertex coverage and (iii) connected traces
  std::vector<std::vector<int>> holders(g.n());
  for (int i = 0; i < t; ++i) {
    for (Vertex v : td.bags[i]) holders[v].push_back(i);
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (holders[v].empty()) return "(i) vertex " + std::to_string(v) + " in no bag";
  }
  for (const auto& e : g.edges()) {
    bool covered = false;
    for (int i : holders[e.u]) {
      if (contains(td.bags[i], e.v)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return "(ii) edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " uncovered";
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!is_connected_set(td.tree, holders[v])) {
      return "(iii) bags containing vertex " + std::to_string(v) + " are not connected";
    }
  }
  if (td.width != td.computed_width()) return "stored width differs from max bag size - 1";
  return std::nullopt;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.n();
  if (n == 0) return make_decomposition({VertexSet{}}, {});
  if (static_cast<int>(order.size()) != n) throw InputError("elimination order must list every vertex");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!g.valid(order[i]) || pos[order[i]] != -1) throw InputError("elimination order is not a permutation");
    pos[order[i]] = i;
  }
  std::vector<VertexSet> higher(n);
  for (const auto& e : g.edges()) {
    if (pos[e.u] < pos[e.v]) higher[e.u].push_back(e.v);
    else higher[e.v].push_back(e.u);
  }
  for (auto& h : higher) h = make_set(std::move(h));
  std::vector<VertexSet> bags(n);
  std::vector<Edge> tree_edges;
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    const VertexSet& hv = higher[v];
    VertexSet bag = hv;
    bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
    bags[i] = bag;
    if (hv.empty()) {
      roots.push_back(i);
      continue;
    }
    Vertex next = hv.front();
    for (Vertex w : hv) {
      if (pos[w] < pos[next]) next = w;
    }
    // fill-in: the remaining higher neighbours become a clique around `next`
    VertexSet rest;
    for (Vertex w : hv) {
      if (w != next) rest.push_back(w);
    }
    higher[next] = set_union(higher[next], rest);
    tree_edges.push_back(make_edge(i, pos[next]));
  }
  for (std::size_t r = 1; r < roots.size(); ++r) tree_edges.push_back(make_edge(roots[r - 1], roots[r]));
  return make_decomposition(std::move(bags), std::move(tree_edges));
}

ExactTreewidth exact_treewidth(const Graph& g, int cap) {
  const int n = g.n();
  if (n > cap) {
    throw CapacityError("exact_treewidth: " + std::to_string(n) + " vertices exceed cap " +
                        std::to_string(cap));
  }
  if (n == 0) return {-1, make_decomposition({VertexSet{}}, {})};
  using Mask = std::uint32_t;
  std::vector<Mask> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  const Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  // |Q(S, v)|: vertices outside S + v reachable from v through S
  auto q_size = [&](Mask s, int v) {
    Mask seen = Mask{1} << v;
    Mask frontier = seen;
    Mask out = 0;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Mask nb = adj[x] & ~seen;
      seen |= nb;
      out |= nb & ~s;
      frontier |= nb & s;
    }
    return std::popcount(out);
  };
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::uint8_t> tw(states, std::numeric_limits<std::uint8_t>::max());
  std::vector<std::int8_t> last(states, -1);
  tw[0] = 0;
  for (std::size_t s = 1; s < states; ++s) {
    Mask sm = static_cast<Mask>(s);
    for (Mask rest = sm; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      Mask prev = sm & ~(Mask{1} << v);
      int cost = std::max<int>(tw[prev], q_size(prev, v));
      if (cost < tw[s]) {
        tw[s] = static_cast<std::uint8_t>(cost);
        last[s] = static_cast<std::int8_t>(v);
      }
    }
  }
  std::vector<Vertex> order(n);
  Mask cur = full;
  for (int i = n - 1; i >= 0; --i) {
    int v = last[cur];
    order[i] = v;
    cur &= ~(Mask{1} << v);
  }
  ExactTreewidth res;
  res.width = tw[full];
  res.td = decomposition_from_order(g, order);
  return res;
}

TreeDecomposition lift_decomposition(const TreeDecomposition& td, const std::vector<Vertex>& to_host) {
  TreeDecomposition out = td;
  for (auto& bag : out.bags) {
    for (auto& v : bag) v = to_host[v];
    bag = make_set(std::move(bag));
  }
  return out;
}

TreeDecomposition join_decompositions(const std::vector<TreeDecomposition>& parts) {
  std::vector<VertexSet> bags;
  std::vector<Edge> edges;
  int prev_first = -1;
  for (const auto& p : parts) {
    int offset = static_cast<int>(bags.size());
    for (const auto& b : p.bags) bags.push_back(b);
    for (const auto& e : p.tree.edges()) edges.push_back({e.u + offset, e.v + offset});
    if (prev_first >= 0) edges.push_back({prev_first, offset});
    prev_first = offset;
  }
  if (bags.empty()) bags.emplace_back();
  return make_decomposition(std::move(bags), std::move(edges));
}

int bracket_k2(int k1, const Rational& c0) {
  if (k1 <= 1) return std::max(k1, 0);
  double denom = boost::rational_cast<double>(c0) * std::sqrt(std::log2(static_cast<double>(k1)));
  if (denom <= 0) return k1;
  return static_cast<int>(std::floor(k1 / denom + 1e-12));
}

}  // namespace bk
