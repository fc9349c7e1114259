#pragma once

// Brute-force references used by the tests. They only read the graph's edge
// list and share no code with the library algorithms they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <boost/rational.hpp>

#include "bramblekit/graph.hpp"

namespace oracle {

using bk::Graph;
using Mask = std::uint64_t;
using Ratio = boost::rational<std::int64_t>;

inline std::vector<Mask> adjacency(const Graph& g) {
  std::vector<Mask> adj(g.n(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

inline Mask mask_of(const std::vector<int>& s) {
  Mask m = 0;
  for (int v : s) m |= Mask{1} << v;
  return m;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline bool connected_mask(const std::vector<Mask>& adj, Mask s) {
  if (s == 0) return false;
  Mask seen = s & (~s + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

/// Treewidth as the minimum over all elimination orders (n <= 9).
inline int treewidth(const Graph& g) {
  const int n = g.n();
  if (n == 0) return -1;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n - 1;
  do {
    std::vector<Mask> adj = adjacency(g);
    Mask alive = (n == 64) ? ~Mask{0} : (Mask{1} << n) - 1;
    int width = 0;
    for (int v : order) {
      Mask nb = adj[v] & alive & ~(Mask{1} << v);
      width = std::max(width, popcount(nb));
      if (width >= best) break;
      for (Mask a = nb; a; a &= a - 1) adj[std::countr_zero(a)] |= nb & ~(Mask{1} << std::countr_zero(a));
      alive &= ~(Mask{1} << v);
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Smallest number of vertices meeting every set (ids below 64).
inline int hitting_order(const std::vector<std::vector<int>>& sets) {
  std::vector<Mask> masks;
  Mask universe = 0;
  for (const auto& s : sets) {
    masks.push_back(mask_of(s));
    universe |= masks.back();
  }
  std::vector<int> verts;
  for (Mask u = universe; u; u &= u - 1) verts.push_back(std::countr_zero(u));
  for (int size = 0; size <= static_cast<int>(verts.size()); ++size) {
    std::vector<int> pick(size);
    std::function<bool(int, int, Mask)> rec = [&](int at, int from, Mask chosen) {
      if (at == size) {
        return std::all_of(masks.begin(), masks.end(), [&](Mask m) { return (m & chosen) != 0; });
      }
      for (int i = from; i < static_cast<int>(verts.size()); ++i) {
        if (rec(at + 1, i + 1, chosen | (Mask{1} << verts[i]))) return true;
      }
      return false;
    };
    if (rec(0, 0, 0)) return size;
  }
  return static_cast<int>(verts.size());
}

inline bool is_bramble(const Graph& g, const std::vector<std::vector<int>>& elements) {
  const auto adj = adjacency(g);
  std::vector<Mask> m;
  for (const auto& e : elements) {
    m.push_back(mask_of(e));
    if (!connected_mask(adj, m.back())) return false;
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    Mask closed = m[i];
    for (Mask a = m[i]; a; a &= a - 1) closed |= adj[std::countr_zero(a)];
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if ((closed & m[j]) == 0) return false;
    }
  }
  return true;
}

/// All partitions (A, B, S) of V with no A-B edge, as (a, b, s) masks.
struct Labeling {
  Mask a, b, s;
};

inline std::vector<Labeling> separations(const Graph& g) {
  const int n = g.n();
  const auto adj = adjacency(g);
  std::vector<Labeling> out;
  std::vector<int> label(n, 0);
  std::function<void(int, Mask, Mask, Mask)> rec = [&](int v, Mask a, Mask b, Mask s) {
    if (v == n) {
      out.push_back({a, b, s});
      return;
    }
    const Mask bit = Mask{1} << v;
    if ((adj[v] & b) == 0) rec(v + 1, a | bit, b, s);
    if ((adj[v] & a) == 0) rec(v + 1, a, b | bit, s);
    rec(v + 1, a, b, s | bit);
  };
  rec(0, 0, 0, 0);
  return out;
}

/// Some separation with |S| <= k and at most gamma |W| terminals on each side.
inline bool balanced_separator_exists(const std::vector<Labeling>& seps, Mask w, int k, Ratio gamma) {
  const Ratio cap = gamma * popcount(w);
  for (const auto& l : seps) {
    if (popcount(l.s) > k) continue;
    if (Ratio(popcount(l.a & w)) <= cap && Ratio(popcount(l.b & w)) <= cap) return true;
  }
  return false;
}

/// Minimum |S| / (|(A u S) n W| |(B u S) n W|) over separations with both
/// factors positive; nullopt when there is none.
inline std::optional<Ratio> sparsest(const std::vector<Labeling>& seps, Mask w) {
  std::optional<Ratio> best;
  for (const auto& l : seps) {
    const int wa = popcount((l.a | l.s) & w);
    const int wb = popcount((l.b | l.s) & w);
    if (wa == 0 || wb == 0) continue;
    Ratio r(popcount(l.s), wa * wb);
    if (!best || r < *best) best = r;
  }
  return best;
}

inline int vertex_cover(const Graph& g) {
  const int n = g.n();
  int best = n;
  for (Mask c = 0; c < (Mask{1} << n); ++c) {
    if (popcount(c) >= best) continue;
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (!((c >> e.u) & 1) && !((c >> e.v) & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) best = popcount(c);
  }
  return best;
}

/// Longest simple path in edges, by depth-first search from every vertex.
inline int longest_path(const Graph& g) {
  const auto adj = adjacency(g);
  int best = 0;
  std::function<void(int, Mask, int)> dfs = [&](int v, Mask used, int len) {
    best = std::max(best, len);
    for (Mask a = adj[v] & ~used; a; a &= a - 1) {
      int u = std::countr_zero(a);
      dfs(u, used | (Mask{1} << u), len + 1);
    }
  };
  for (int v = 0; v < g.n(); ++v) dfs(v, Mask{1} << v, 0);
  return best;
}

/// Bags and tree edges form a tree decomposition of g.
inline bool is_decomposition(const Graph& g, const std::vector<std::vector<int>>& bags,
                             const std::vector<std::pair<int, int>>& tree) {
  const int nodes = static_cast<int>(bags.size());
  if (nodes == 0 || static_cast<int>(tree.size()) != nodes - 1) return false;
  std::vector<Mask> tadj(nodes, 0);
  for (auto [a, b] : tree) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) return false;
    tadj[a] |= Mask{1} << b;
    tadj[b] |= Mask{1} << a;
  }
  if (nodes > 64) return false;
  const Mask all = nodes == 64 ? ~Mask{0} : (Mask{1} << nodes) - 1;
  if (!connected_mask(tadj, all)) return false;
  std::vector<Mask> bmask;
  for (const auto& b : bags) bmask.push_back(mask_of(b));
  for (int v = 0; v < g.n(); ++v) {
    Mask holders = 0;
    for (int i = 0; i < nodes; ++i) {
      if ((bmask[i] >> v) & 1) holders |= Mask{1} << i;
    }
    if (!connected_mask(tadj, holders)) return false;
  }
  for (const auto& e : g.edges()) {
    const Mask both = (Mask{1} << e.u) | (Mask{1} << e.v);
    if (std::none_of(bmask.begin(), bmask.end(), [&](Mask b) { return (b & both) == both; })) return false;
  }
  return true;
}

/// Satisfiability of a CNF (literals +-(var + 1)) by enumeration.
inline bool satisfiable(int vars, const std::vector<std::vector<int>>& clauses) {
  for (Mask x = 0; x < (Mask{1} << vars); ++x) {
    bool ok = true;
    for (const auto& c : clauses) {
      bool sat = false;
      for (int lit : c) {
        const int v = std::abs(lit) - 1;
        const bool val = (x >> v) & 1;
        if ((lit > 0) == val) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// One member per class with no edge between picks.
inline bool transversal_exists(const Graph& g, const std::vector<std::vector<int>>& classes) {
  const auto adj = adjacency(g);
  std::function<bool(std::size_t, Mask)> rec = [&](std::size_t i, Mask picked) {
    if (i == classes.size()) return true;
    for (int v : classes[i]) {
      if ((adj[v] & picked) == 0 && rec(i + 1, picked | (Mask{1} << v))) return true;
    }
    return false;
  };
  return rec(0, 0);
}

/// Subdivision of K_p: distinct branch vertices, one path per pair joining
/// them through the host, interiors disjoint from each other and the branches.
inline bool is_clique_subdivision(const Graph& g, int p, const std::vector<int>& branch,
                                  const std::vector<std::pair<std::pair<int, int>, std::vector<int>>>& paths) {
  if (static_cast<int>(branch.size()) != p) return false;
  std::vector<int> owner(g.n(), -1);
  for (int i = 0; i < p; ++i) {
    if (owner[branch[i]] != -1) return false;
    owner[branch[i]] = -2;
  }
  if (static_cast<int>(paths.size()) != p * (p - 1) / 2) return false;
  std::vector<std::vector<char>> seen(p, std::vector<char>(p, 0));
  int idx = 0;
  for (const auto& [ab, path] : paths) {
    auto [a, b] = ab;
    if (a < 0 || b < 0 || a >= p || b >= p || a == b || seen[a][b]) return false;
    seen[a][b] = seen[b][a] = 1;
    if (path.size() < 2 || path.front() != branch[a] || path.back() != branch[b]) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!g.adjacent(path[i], path[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (owner[path[i]] != -1) return false;
      owner[path[i]] = idx;
    }
    ++idx;
  }
  return true;
}

}  // namespace oracle
