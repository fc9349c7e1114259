#include "bramblekit/bramble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace bk {

namespace {

using PairKey = std::pair<Vertex, Vertex>;

void add_path_flow(std::map<std::tuple<Vertex, Vertex, Path>, BigRational>& acc, Vertex u, Vertex v, Path p,
                   const BigRational& amount) {
  acc[{u, v, std::move(p)}] += amount;
}

std::vector<PathFlow> flatten(std::map<std::tuple<Vertex, Vertex, Path>, BigRational>& acc) {
  std::vector<PathFlow> out;
  for (auto& [key, amount] : acc) {
    if (amount == 0) continue;
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), amount});
  }
  return out;
}

bool terminals_connected(const Graph& g, const VertexSet& w) {
  for (const auto& c : components(g)) {
    if (contains(c, w.front())) return is_subset(w, c);
  }
  return false;
}

// Exact arc formulation, one commodity per source; arcs into the source are dropped.
std::optional<ConcurrentFlow> exact_flow(const Graph& g, const VertexSet& w, const Constants& cfg) {
  const int t = static_cast<int>(w.size());
  std::vector<Edge> arcs;
  for (Vertex x = 0; x < g.n(); ++x) {
    for (Vertex y : g.neighbors(x)) arcs.push_back({x, y});
  }
  long long vars = 1;
  for (Vertex u : w) vars += static_cast<long long>(arcs.size()) - g.degree(u);
  if (vars > cfg.flow_exact_var_cap) return std::nullopt;

  // var[a][arc] or -1
  std::vector<std::vector<int>> var(t, std::vector<int>(arcs.size(), -1));
  int next = 0;
  for (int a = 0; a < t; ++a) {
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      if (arcs[e].v != w[a]) var[a][e] = next++;
    }
  }
  const int eps = next++;
  LinearProgram<BigRational> lp(next);
  lp.objective[eps] = 1;
  for (int a = 0; a < t; ++a) {
    for (Vertex x = 0; x < g.n(); ++x) {
      if (x == w[a]) continue;
      std::vector<std::pair<int, BigRational>> row;
      for (std::size_t e = 0; e < arcs.size(); ++e) {
        if (var[a][e] < 0) continue;
        if (arcs[e].v == x) row.push_back({var[a][e], 1});
        if (arcs[e].u == x) row.push_back({var[a][e], -1});
      }
      if (contains(w, x)) row.push_back({eps, -1});
      if (!row.empty()) lp.add_row(std::move(row), Relation::Eq, 0);
    }
  }
  for (Vertex x = 0; x < g.n(); ++x) {
    std::vector<std::pair<int, BigRational>> row;
    for (int a = 0; a < t; ++a) {
      if (x == w[a]) continue;
      for (std::size_t e = 0; e < arcs.size(); ++e) {
        if (var[a][e] >= 0 && arcs[e].v == x) row.push_back({var[a][e], 1});
      }
    }
    if (contains(w, x)) row.push_back({eps, BigRational(t - 1)});
    if (!row.empty()) lp.add_row(std::move(row), Relation::Le, 1);
  }
  auto res = solve_lp(lp);
  if (res.status != LpStatus::Optimal) throw std::logic_error("max_concurrent_flow: LP not optimal");

  ConcurrentFlow out;
  out.w = w;
  out.value = res.value;
  out.upper_bound = res.value;
  out.optimal = true;
  std::map<std::tuple<Vertex, Vertex, Path>, BigRational> acc;
  for (int a = 0; a < t; ++a) {
    std::vector<BigRational> f(arcs.size());
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      if (var[a][e] >= 0) f[e] = res.x[var[a][e]];
    }
    std::map<Vertex, BigRational> demand;
    for (Vertex v : w) {
      if (v != w[a]) demand[v] = out.value;
    }
    while (true) {
      // BFS on positive arcs to a terminal with remaining demand
      std::vector<int> via(g.n(), -1);
      std::vector<char> seen(g.n(), 0);
      std::vector<Vertex> queue{w[a]};
      seen[w[a]] = 1;
      Vertex found = -1;
      for (std::size_t qi = 0; qi < queue.size() && found < 0; ++qi) {
        Vertex x = queue[qi];
        for (std::size_t e = 0; e < arcs.size(); ++e) {
          if (arcs[e].u != x || f[e] <= 0 || seen[arcs[e].v]) continue;
          Vertex y = arcs[e].v;
          seen[y] = 1;
          via[y] = static_cast<int>(e);
          auto it = demand.find(y);
          if (it != demand.end() && it->second > 0) {
            found = y;
            break;
          }
          queue.push_back(y);
        }
      }
      if (found < 0) break;
      Path p{found};
      BigRational amount = demand[found];
      for (Vertex x = found; x != w[a];) {
        int e = via[x];
        amount = std::min(amount, f[e]);
        x = arcs[e].u;
        p.push_back(x);
      }
      std::reverse(p.begin(), p.end());
      for (Vertex x = found; x != w[a];) {
        int e = via[x];
        f[e] -= amount;
        x = arcs[e].u;
      }
      demand[found] -= amount;
      add_path_flow(acc, w[a], found, std::move(p), amount);
    }
    for (auto& [v, d] : demand) {
      if (d != 0) throw std::logic_error("max_concurrent_flow: path decomposition left demand");
    }
  }
  out.path_flows = flatten(acc);
  return out;
}

// Shortest paths from src where a path costs the sum of its vertex lengths.
std::vector<Vertex> vertex_dijkstra(const Graph& g, Vertex src, const std::vector<double>& len,
                                    std::vector<double>& dist) {
  const double inf = std::numeric_limits<double>::infinity();
  dist.assign(g.n(), inf);
  std::vector<Vertex> parent(g.n(), -1);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[src] = len[src];
  parent[src] = src;
  pq.push({dist[src], src});
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (d > dist[x]) continue;
    for (Vertex y : g.neighbors(x)) {
      double nd = d + len[y];
      if (nd < dist[y]) {
        dist[y] = nd;
        parent[y] = x;
        pq.push({nd, y});
      }
    }
  }
  return parent;
}

ConcurrentFlow mwu_flow(const Graph& g, const VertexSet& w, const Constants& cfg) {
  const int t = static_cast<int>(w.size());
  const double gap = 1.0 + boost::rational_cast<double>(cfg.flow_epsilon);
  const double eta = boost::rational_cast<double>(cfg.flow_epsilon);
  std::vector<double> len(g.n(), 1.0);
  std::vector<long long> load(g.n(), 0);
  std::map<std::tuple<Vertex, Vertex, Path>, long long> counts;
  // a single terminal carries 2(t-1) units per unit of value
  double best_upper = 1.0 / (2.0 * (t - 1));
  std::vector<double> dist;
  int phases = 0;
  auto upper_from_lengths = [&]() {
    double total = 0;
    for (double l : len) total += l;
    double sum = 0;
    for (Vertex u : w) {
      vertex_dijkstra(g, u, len, dist);
      for (Vertex v : w) {
        if (v != u) sum += dist[v];
      }
    }
    return total / sum;
  };
  while (phases < cfg.flow_max_phases) {
    ++phases;
    for (Vertex u : w) {
      auto parent = vertex_dijkstra(g, u, len, dist);
      std::vector<int> used(g.n(), 0);
      for (Vertex v : w) {
        if (v == u) continue;
        Path p;
        for (Vertex x = v; x != u; x = parent[x]) p.push_back(x);
        p.push_back(u);
        std::reverse(p.begin(), p.end());
        for (Vertex x : p) {
          ++used[x];
          ++load[x];
        }
        ++counts[{u, v, std::move(p)}];
      }
      for (Vertex x = 0; x < g.n(); ++x) {
        if (used[x]) len[x] *= std::exp(eta * used[x] / (t - 1));
      }
    }
    double top = *std::max_element(len.begin(), len.end());
    for (double& l : len) l /= top;
    const double lower = static_cast<double>(phases) / static_cast<double>(*std::max_element(load.begin(), load.end()));
    if (phases % 10 == 0 || phases == cfg.flow_max_phases) best_upper = std::min(best_upper, upper_from_lengths());
    if (best_upper <= gap * lower) break;
  }
  const long long worst = *std::max_element(load.begin(), load.end());
  ConcurrentFlow out;
  out.w = w;
  out.value = BigRational(phases) / BigRational(worst);
  out.upper_bound = std::max(out.value, BigRational(best_upper * (1 + 1e-9)));
  out.optimal = false;
  out.phases = phases;
  for (auto& [key, c] : counts) {
    out.path_flows.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), BigRational(c) / BigRational(worst)});
  }
  return out;
}

}  // namespace

Check validate_concurrent_flow(const Graph& g, const ConcurrentFlow& f) {
  if (f.value < 0) return "negative value";
  std::map<PairKey, BigRational> per_pair;
  std::vector<BigRational> load(g.n());
  for (const auto& pf : f.path_flows) {
    if (pf.amount <= 0) return "non-positive path flow";
    if (!contains(f.w, pf.u) || !contains(f.w, pf.v) || pf.u == pf.v) return "path flow between non-terminals";
    if (auto bad = check_path(g, pf.path)) return "flow path: " + *bad;
    if (pf.path.front() != pf.u || pf.path.back() != pf.v) return "flow path does not join its pair";
    per_pair[{pf.u, pf.v}] += pf.amount;
    for (Vertex x : pf.path) load[x] += pf.amount;
  }
  for (Vertex u : f.w) {
    for (Vertex v : f.w) {
      if (u == v) continue;
      auto it = per_pair.find({u, v});
      BigRational got = it == per_pair.end() ? BigRational(0) : it->second;
      if (got != f.value) return "pair (" + std::to_string(u) + "," + std::to_string(v) + ") carries a different value";
    }
  }
  for (Vertex x = 0; x < g.n(); ++x) {
    if (load[x] > 1) return "vertex " + std::to_string(x) + " overloaded";
  }
  if (f.upper_bound < f.value) return "upper bound below value";
  return std::nullopt;
}

ConcurrentFlow max_concurrent_flow(const Graph& g, const VertexSet& w, const Constants& cfg) {
  require_valid_set(g, w, "max_concurrent_flow: w");
  if (w.size() < 2) throw InputError("max_concurrent_flow: need at least two terminals");
  if (!terminals_connected(g, w)) {
    ConcurrentFlow out;
    out.w = w;
    out.optimal = true;
    return out;
  }
  if (auto exact = exact_flow(g, w, cfg)) return std::move(*exact);
  return mwu_flow(g, w, cfg);
}

}  // namespace bk
