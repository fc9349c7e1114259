#include "bramblekit/bramble.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "bramblekit/generators.hpp"

namespace bk {

std::string to_string(OrderMethod m) {
  switch (m) {
    case OrderMethod::ExactHittingSet:
      return "exact-hitting-set";
    case OrderMethod::LpFractional:
      return "lp-fractional";
    case OrderMethod::Structural:
      return "structural";
  }
  return "";
}

OrderMethod parse_order_method(const std::string& name) {
  if (name == "exact-hitting-set") return OrderMethod::ExactHittingSet;
  if (name == "lp-fractional") return OrderMethod::LpFractional;
  if (name == "structural") return OrderMethod::Structural;
  throw InputError("unknown order method: " + name);
}

namespace {

bool touch(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (intersects(a, b)) return true;
  const VertexSet& small = a.size() <= b.size() ? a : b;
  const VertexSet& large = a.size() <= b.size() ? b : a;
  for (Vertex v : small) {
    for (Vertex w : g.neighbors(v)) {
      if (contains(large, w)) return true;
    }
  }
  return false;
}

// Elements restricted to their union, as bitsets over compressed vertex ids.
struct Incidence {
  VertexSet universe;
  std::vector<boost::dynamic_bitset<>> element_vertices;
  std::vector<boost::dynamic_bitset<>> vertex_elements;

  explicit Incidence(const std::vector<VertexSet>& elements) {
    for (const auto& e : elements) universe = set_union(universe, e);
    const std::size_t n = universe.size();
    const std::size_t m = elements.size();
    vertex_elements.assign(n, boost::dynamic_bitset<>(m));
    for (std::size_t i = 0; i < m; ++i) {
      boost::dynamic_bitset<> bits(n);
      for (Vertex v : elements[i]) {
        auto idx = static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), v) - universe.begin());
        bits.set(idx);
        vertex_elements[idx].set(i);
      }
      element_vertices.push_back(std::move(bits));
    }
  }
};

class HittingSetSearch {
 public:
  explicit HittingSetSearch(const Incidence& inc) : inc_(inc) {}

  std::vector<std::size_t> run() {
    const std::size_t m = inc_.element_vertices.size();
    boost::dynamic_bitset<> unhit(m);
    unhit.set();
    best_ = greedy(unhit);
    std::vector<std::size_t> chosen;
    dfs(unhit, chosen);
    return best_;
  }

 private:
  std::vector<std::size_t> greedy(boost::dynamic_bitset<> unhit) const {
    std::vector<std::size_t> out;
    while (unhit.any()) {
      std::size_t best_v = 0;
      std::size_t best_c = 0;
      for (std::size_t v = 0; v < inc_.vertex_elements.size(); ++v) {
        std::size_t c = (inc_.vertex_elements[v] & unhit).count();
        if (c > best_c) {
          best_c = c;
          best_v = v;
        }
      }
      out.push_back(best_v);
      unhit -= inc_.vertex_elements[best_v];
    }
    return out;
  }

  std::size_t lower_bound(const boost::dynamic_bitset<>& unhit) const {
    std::size_t max_cover = 0;
    for (const auto& ve : inc_.vertex_elements) max_cover = std::max(max_cover, (ve & unhit).count());
    std::size_t by_cover = max_cover == 0 ? 0 : (unhit.count() + max_cover - 1) / max_cover;
    // pairwise disjoint unhit elements each need their own vertex
    boost::dynamic_bitset<> used(inc_.vertex_elements.size());
    std::size_t packing = 0;
    for (auto i = unhit.find_first(); i != boost::dynamic_bitset<>::npos; i = unhit.find_next(i)) {
      if (!inc_.element_vertices[i].intersects(used)) {
        used |= inc_.element_vertices[i];
        ++packing;
      }
    }
    return std::max(by_cover, packing);
  }

  void dfs(const boost::dynamic_bitset<>& unhit, std::vector<std::size_t>& chosen) {
    if (unhit.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + lower_bound(unhit) >= best_.size()) return;
    std::size_t pick = unhit.find_first();
    for (auto i = pick; i != boost::dynamic_bitset<>::npos; i = unhit.find_next(i)) {
      if (inc_.element_vertices[i].count() < inc_.element_vertices[pick].count()) pick = i;
    }
    std::vector<std::pair<std::size_t, std::size_t>> options;
    const auto& ev = inc_.element_vertices[pick];
    for (auto v = ev.find_first(); v != boost::dynamic_bitset<>::npos; v = ev.find_next(v)) {
      options.push_back({(inc_.vertex_elements[v] & unhit).count(), v});
    }
    std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [cover, v] : options) {
      chosen.push_back(v);
      dfs(unhit - inc_.vertex_elements[v], chosen);
      chosen.pop_back();
    }
  }

  const Incidence& inc_;
  std::vector<std::size_t> best_;
};

constexpr long long kExactLpCells = 6000;

}  // namespace

Check validate_bramble(const Graph& g, const Bramble& b) {
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    const VertexSet& e = b.elements[i];
    if (e.empty()) return "element " + std::to_string(i) + " is empty";
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (!g.valid(e[j])) return "element " + std::to_string(i) + " has an invalid vertex";
      if (j > 0 && e[j - 1] >= e[j]) return "element " + std::to_string(i) + " is not sorted";
    }
    if (!is_connected_set(g, e)) return "element " + std::to_string(i) + " is not connected";
  }
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < b.elements.size(); ++j) {
      if (!touch(g, b.elements[i], b.elements[j])) {
        return "elements " + std::to_string(i) + " and " + std::to_string(j) + " do not touch";
      }
    }
  }
  return std::nullopt;
}

Bramble crosses_bramble(int l) {
  if (l < 1) throw InputError("crosses_bramble: l must be positive");
  Bramble b;
  for (int r = 0; r < l; ++r) {
    for (int c = 0; c < l; ++c) b.elements.push_back(set_union(grid_row(l, r), grid_column(l, c)));
  }
  return b;
}

Bramble grid_bramble(int l) {
  if (l < 1) throw InputError("grid_bramble: l must be positive");
  Bramble b;
  auto id = [l](int r, int c) { return r * l + c; };
  for (int r = 0; r + 1 < l; ++r) {
    for (int c = 0; c + 1 < l; ++c) {
      VertexSet e;
      for (int x = 0; x + 1 < l; ++x) {
        e.push_back(id(r, x));
        e.push_back(id(x, c));
      }
      b.elements.push_back(make_set(std::move(e)));
    }
  }
  VertexSet last_row;
  for (int c = 0; c < l; ++c) last_row.push_back(id(l - 1, c));
  b.elements.push_back(last_row);
  if (l > 1) {
    VertexSet last_col;
    for (int r = 0; r + 1 < l; ++r) last_col.push_back(id(r, l - 1));
    b.elements.push_back(last_col);
  }
  return b;
}

HittingSet bramble_order_exact(const Bramble& b, const Constants& cfg) {
  if (static_cast<int>(b.elements.size()) > cfg.hitting_set_max_elements) {
    throw CapacityError("bramble_order_exact: more than " + std::to_string(cfg.hitting_set_max_elements) +
                        " elements");
  }
  for (const auto& e : b.elements) {
    if (e.empty()) throw InputError("bramble_order_exact: empty element");
  }
  Incidence inc(b.elements);
  if (static_cast<int>(inc.universe.size()) > cfg.hitting_set_max_vertices) {
    throw CapacityError("bramble_order_exact: union has more than " +
                        std::to_string(cfg.hitting_set_max_vertices) + " vertices");
  }
  HittingSet out;
  if (b.elements.empty()) return out;
  HittingSetSearch search(inc);
  for (std::size_t v : search.run()) out.hitting_set.push_back(inc.universe[v]);
  out.hitting_set = make_set(std::move(out.hitting_set));
  out.order = static_cast<int>(out.hitting_set.size());
  return out;
}

LpBound bramble_order_lp(const Bramble& b, const Constants& cfg) {
  (void)cfg;
  LpBound out;
  if (b.elements.empty()) {
    out.optimal = true;
    return out;
  }
  for (const auto& e : b.elements) {
    if (e.empty()) throw InputError("bramble_order_lp: empty element");
  }
  Incidence inc(b.elements);
  const int m = static_cast<int>(b.elements.size());
  const int n = static_cast<int>(inc.universe.size());
  // packing dual: maximise sum y_B subject to sum_{B containing v} y_B <= 1
  auto build = [&](auto one) {
    using T = decltype(one);
    LinearProgram<T> lp(m);
    for (int i = 0; i < m; ++i) lp.objective[i] = one;
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, T>> row;
      const auto& ve = inc.vertex_elements[v];
      for (auto i = ve.find_first(); i != boost::dynamic_bitset<>::npos; i = ve.find_next(i)) {
        row.push_back({static_cast<int>(i), one});
      }
      lp.add_row(std::move(row), Relation::Le, one);
    }
    return lp;
  };
  if (static_cast<long long>(m) * n <= kExactLpCells) {
    auto res = solve_lp(build(BigRational(1)));
    if (res.status != LpStatus::Optimal) throw std::logic_error("bramble_order_lp: exact LP failed");
    out.value = res.value;
    out.optimal = true;
    return out;
  }
  auto res = solve_lp(build(1.0));
  if (res.status != LpStatus::Optimal) throw std::logic_error("bramble_order_lp: LP failed");
  // round the dual down to a dyadic grid and rescale by the worst load
  const BigRational scale(1 << 20);
  std::vector<BigRational> y(m);
  BigRational total = 0;
  for (int i = 0; i < m; ++i) {
    double yi = std::max(0.0, res.x[i]);
    y[i] = BigRational(static_cast<long long>(std::floor(yi * (1 << 20)))) / scale;
    total += y[i];
  }
  BigRational worst = 0;
  for (int v = 0; v < n; ++v) {
    BigRational load = 0;
    const auto& ve = inc.vertex_elements[v];
    for (auto i = ve.find_first(); i != boost::dynamic_bitset<>::npos; i = ve.find_next(i)) load += y[i];
    worst = std::max(worst, load);
  }
  out.value = worst > 1 ? BigRational(total / worst) : total;
  out.optimal = false;
  return out;
}

OrderCertificate certified_order(const std::vector<VertexSet>& elements, const Constants& cfg) {
  Bramble b{elements, std::nullopt};
  if (static_cast<int>(elements.size()) <= cfg.hitting_set_max_elements) {
    VertexSet uni;
    for (const auto& e : elements) uni = set_union(uni, e);
    if (static_cast<int>(uni.size()) <= cfg.hitting_set_max_vertices) {
      return {bramble_order_exact(b, cfg).order, OrderMethod::ExactHittingSet};
    }
  }
  LpBound lp = bramble_order_lp(b, cfg);
  BigRational v = lp.value;
  boost::multiprecision::cpp_int q = boost::multiprecision::numerator(v) / boost::multiprecision::denominator(v);
  if (BigRational(q) < v) ++q;
  return {static_cast<int>(q), OrderMethod::LpFractional};
}

Path hitting_path(const Graph& g, const Bramble& b) {
  if (auto bad = validate_bramble(g, b)) throw InputError("hitting_path: invalid bramble: " + *bad);
  if (b.elements.empty()) throw InputError("hitting_path: empty bramble");
  const std::size_t m = b.elements.size();
  std::vector<char> on_path(g.n(), 0);
  std::vector<char> hit(m, 0);
  Path path{b.elements[0].front()};
  on_path[path.back()] = 1;
  auto mark_hits = [&](Vertex v) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!hit[i] && contains(b.elements[i], v)) hit[i] = 1;
    }
  };
  mark_hits(path.back());
  std::size_t current = 0;
  while (true) {
    std::size_t next = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!hit[i]) {
        next = i;
        break;
      }
    }
    if (next == m) break;
    const VertexSet& cur = b.elements[current];
    const VertexSet& target = b.elements[next];
    // BFS inside the current element from the endpoint to the first vertex
    // that lies in, or is adjacent to, the unhit element
    Vertex start = path.back();
    std::map<Vertex, Vertex> parent{{start, start}};
    std::vector<Vertex> queue{start};
    Vertex reached = -1;
    Vertex entry = -1;
    for (std::size_t qi = 0; qi < queue.size() && reached < 0; ++qi) {
      Vertex x = queue[qi];
      if (contains(target, x)) {
        reached = x;
        entry = x;
        break;
      }
      for (Vertex y : g.neighbors(x)) {
        if (contains(target, y)) {
          reached = x;
          entry = y;
          break;
        }
      }
      if (reached >= 0) break;
      for (Vertex y : g.neighbors(x)) {
        if (contains(cur, y) && !parent.count(y)) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (reached < 0) throw std::logic_error("hitting_path: elements do not touch");
    Path ext;
    for (Vertex x = reached; x != start; x = parent[x]) ext.push_back(x);
    std::reverse(ext.begin(), ext.end());
    if (entry != reached) ext.push_back(entry);
    for (Vertex x : ext) {
      if (on_path[x]) throw std::logic_error("hitting_path: extension revisits the path");
      on_path[x] = 1;
      path.push_back(x);
      mark_hits(x);
    }
    current = next;
  }
  return path;
}

Check validate_weak_web(const Graph& g, const WeakKWebOfPaths& web) {
  if (web.k < 1) return "k must be positive";
  const std::size_t h = web.paths.size();
  VertexSet seen;
  std::vector<VertexSet> sets;
  for (std::size_t i = 0; i < h; ++i) {
    if (auto bad = check_path(g, web.paths[i])) return "path " + std::to_string(i) + ": " + *bad;
    VertexSet s = make_set(web.paths[i]);
    if (intersects(seen, s)) return "paths are not disjoint";
    seen = set_union(seen, s);
    sets.push_back(std::move(s));
  }
  if (web.linkages.size() != h * (h - 1) / 2) return "expected one linkage family per pair";
  std::size_t idx = 0;
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i + 1; j < h; ++j, ++idx) {
      const Linkage& L = web.linkages[idx];
      std::string name = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (L.i != static_cast<int>(i) || L.j != static_cast<int>(j)) return "linkage families out of order";
      if (static_cast<int>(L.paths.size()) < web.k) return "fewer than k paths for pair " + name;
      VertexSet used;
      for (const auto& p : L.paths) {
        if (auto bad = check_path(g, p)) return "linkage " + name + ": " + *bad;
        if (!contains(sets[i], p.front()) || !contains(sets[j], p.back())) {
          return "linkage path of " + name + " does not join the paths";
        }
        for (std::size_t x = 1; x + 1 < p.size(); ++x) {
          if (contains(sets[i], p[x]) || contains(sets[j], p[x])) return "linkage path of " + name + " re-enters";
        }
        VertexSet pv = make_set(p);
        if (intersects(used, pv)) return "linkage paths of " + name + " are not disjoint";
        used = set_union(used, pv);
      }
    }
  }
  return std::nullopt;
}

WeakWebResult weak_web_from_bramble(const Graph& g, const Bramble& b, int k, int h, const Constants& cfg) {
  if (k < 1 || h < 1) throw InputError("weak_web_from_bramble: k and h must be positive");
  WeakWebResult out;
  out.requested_h = h;
  out.web.k = k;
  Path p = hitting_path(g, b);
  std::vector<char> taken(b.elements.size(), 0);

  // elements not yet cut away that meet p[a..e]
  auto hit_by = [&](std::size_t a, std::size_t e) {
    VertexSet seg = make_set(Path(p.begin() + static_cast<std::ptrdiff_t>(a), p.begin() + static_cast<std::ptrdiff_t>(e) + 1));
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
      if (!taken[i] && intersects(b.elements[i], seg)) idx.push_back(i);
    }
    return idx;
  };
  auto order_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<VertexSet> els;
    for (std::size_t i : idx) els.push_back(b.elements[i]);
    return certified_order(els, cfg);
  };

  std::vector<Path> segments;
  std::size_t start = 0;
  while (static_cast<int>(segments.size()) < h && start < p.size()) {
    if (order_of(hit_by(start, p.size() - 1)).lower_bound < k) break;
    // shortest prefix whose sub-bramble certifies order at least k
    std::size_t lo = start;
    std::size_t hi = p.size() - 1;
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (order_of(hit_by(start, mid)).lower_bound >= k) hi = mid;
      else lo = mid + 1;
    }
    auto idx = hit_by(start, lo);
    out.segment_orders.push_back(order_of(idx));
    for (std::size_t i : idx) taken[i] = 1;
    segments.emplace_back(p.begin() + static_cast<std::ptrdiff_t>(start), p.begin() + static_cast<std::ptrdiff_t>(lo) + 1);
    start = lo + 1;
  }

  // keep the longest prefix of segments that is pairwise k-linked
  std::vector<Linkage> links;
  std::size_t achieved = 0;
  for (std::size_t j = 0; j < segments.size(); ++j) {
    std::vector<Linkage> row;
    bool ok = true;
    for (std::size_t i = 0; i < j && ok; ++i) {
      DisjointPaths dp = disjoint_paths(g, make_set(segments[i]), make_set(segments[j]));
      if (static_cast<int>(dp.paths.size()) < k) {
        ok = false;
        out.note = "segments " + std::to_string(i) + " and " + std::to_string(j) + " have only " +
                   std::to_string(dp.paths.size()) + " disjoint connections";
        break;
      }
      dp.paths.resize(k);
      row.push_back({static_cast<int>(i), static_cast<int>(j), std::move(dp.paths)});
    }
    if (!ok) break;
    for (auto& l : row) links.push_back(std::move(l));
    achieved = j + 1;
  }
  std::sort(links.begin(), links.end(), [](const Linkage& a, const Linkage& b2) {
    return std::pair(a.i, a.j) < std::pair(b2.i, b2.j);
  });
  segments.resize(achieved);
  out.web.paths = std::move(segments);
  out.web.linkages = std::move(links);
  out.achieved_h = static_cast<int>(achieved);
  out.complete = out.achieved_h == h;
  if (!out.complete && out.note.empty()) {
    out.note = "bramble order exhausted after " + std::to_string(achieved) + " segments";
  }
  return out;
}

Bramble bramble_from_web(const Graph& g, const KWeb& web) {
  if (auto bad = validate_web(g, web)) throw InputError("bramble_from_web: invalid web: " + *bad);
  const int h = web.h;
  const int width = h * h;
  if (web.k < width) throw InputError("bramble_from_web: linkage width below h^2");
  Bramble b;
  for (int i = 0; i < h; ++i) {
    for (int t = 0; t < width; ++t) {
      VertexSet e = web.subtrees[i];
      for (const auto& L : web.linkages) {
        if (L.i != i && L.j != i) continue;
        const Path& path = L.paths[t];
        // drop the endpoint in the far flat
        Path part = L.i == i ? Path(path.begin(), path.end() - 1) : Path(path.begin() + 1, path.end());
        e = set_union(e, make_set(std::move(part)));
      }
      b.elements.push_back(std::move(e));
    }
  }
  b.order = OrderCertificate{h, OrderMethod::Structural};
  return b;
}

}  // namespace bk
