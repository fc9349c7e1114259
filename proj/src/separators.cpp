#include "bramblekit/separators.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace bk {

namespace {

int count_in(const VertexSet& s, const VertexSet& w) {
  return static_cast<int>(set_intersection(s, w).size());
}

// Subset-sum over component weights. reach[i][x]: the first i items can sum to x.
struct SubsetSum {
  std::vector<int> items;
  std::vector<std::vector<char>> reach;
  int total = 0;

  explicit SubsetSum(std::vector<int> weights) : items(std::move(weights)) {
    for (int x : items) total += x;
    reach.assign(items.size() + 1, std::vector<char>(total + 1, 0));
    reach[0][0] = 1;
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (int x = 0; x <= total; ++x) {
        if (!reach[i][x]) continue;
        reach[i + 1][x] = 1;
        reach[i + 1][x + items[i]] = 1;
      }
    }
  }

  bool achievable(int x) const { return x >= 0 && x <= total && reach[items.size()][x]; }

  // Items chosen for side A so that they sum to x.
  std::vector<char> pick(int x) const {
    std::vector<char> in_a(items.size(), 0);
    for (std::size_t i = items.size(); i-- > 0;) {
      if (reach[i][x]) continue;
      in_a[i] = 1;
      x -= items[i];
    }
    return in_a;
  }
};

Separator assemble(const std::vector<VertexSet>& comps, const std::vector<char>& in_a,
                   const VertexSet& s) {
  Separator sep;
  sep.s = s;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto& side = in_a[i] ? sep.a : sep.b;
    side.insert(side.end(), comps[i].begin(), comps[i].end());
  }
  sep.a = make_set(std::move(sep.a));
  sep.b = make_set(std::move(sep.b));
  return sep;
}

struct Candidate {
  Separator sep;
  Rational alpha{0};
  bool valid = false;
};

// Sparsest way to distribute the components of u \ s over two sides.
Candidate best_split(const Graph& g, const VertexSet& u, const VertexSet& s, const VertexSet& w) {
  Candidate out;
  auto comps = components_within(g, set_difference(u, s));
  std::vector<int> weights;
  weights.reserve(comps.size());
  for (const auto& c : comps) weights.push_back(count_in(c, w));
  const int sw = count_in(s, w);
  SubsetSum ss(weights);
  long long best_prod = 0;
  int best_a = -1;
  for (int a = ss.total; a >= 0; --a) {
    if (!ss.achievable(a)) continue;
    long long prod = static_cast<long long>(a + sw) * (ss.total - a + sw);
    if (prod > best_prod) {
      best_prod = prod;
      best_a = a;
    }
  }
  if (best_a < 0 || best_prod == 0) return out;
  out.sep = assemble(comps, ss.pick(best_a), s);
  out.alpha = Rational(static_cast<std::int64_t>(s.size()), best_prod);
  out.valid = true;
  return out;
}

bool better(const Candidate& x, const Candidate& best) {
  if (!best.valid) return true;
  if (x.alpha != best.alpha) return x.alpha < best.alpha;
  if (x.sep.s.size() != best.sep.s.size()) return x.sep.s.size() < best.sep.s.size();
  return x.sep.s < best.sep.s;
}

void require_connected_within(const Graph& g, const VertexSet& u, const char* what) {
  if (!is_connected_set(g, u)) throw InputError(std::string(what) + ": set is not connected");
}

}  // namespace

Check validate_separator(const Graph& g, const VertexSet& universe, const Separator& sep) {
  for (const VertexSet* part : {&sep.a, &sep.b, &sep.s}) {
    for (std::size_t i = 0; i < part->size(); ++i) {
      if (!g.valid((*part)[i])) return "separator has invalid vertex";
      if (i > 0 && (*part)[i - 1] >= (*part)[i]) return "separator part not sorted";
    }
  }
  if (intersects(sep.a, sep.b) || intersects(sep.a, sep.s) || intersects(sep.b, sep.s)) {
    return "separator parts overlap";
  }
  if (set_union(set_union(sep.a, sep.b), sep.s) != universe) return "separator parts do not cover the universe";
  for (Vertex v : sep.a) {
    for (Vertex x : g.neighbors(v)) {
      if (contains(sep.b, x)) return "edge " + std::to_string(v) + "-" + std::to_string(x) + " joins A and B";
    }
  }
  return std::nullopt;
}

Rational sparsity(const Graph& g, const Separator& sep, const VertexSet& w) {
  require_valid_set(g, w, "sparsity");
  const int sw = count_in(sep.s, w);
  const int left = count_in(sep.a, w) + sw;
  const int right = count_in(sep.b, w) + sw;
  if (left == 0 || right == 0) throw InputError("sparsity undefined: a side carries no W-vertex");
  return Rational(static_cast<std::int64_t>(sep.s.size()), static_cast<std::int64_t>(left) * right);
}

std::optional<Separator> balanced_separator_exact(const Graph& g, const VertexSet& w, int k,
                                                  const Rational& gamma, const Constants& cfg) {
  const int n = g.n();
  if (n > cfg.exact_cut_cap) {
    throw CapacityError("balanced_separator_exact: " + std::to_string(n) + " vertices exceed cap " +
                        std::to_string(cfg.exact_cut_cap));
  }
  require_valid_set(g, w, "balanced_separator_exact");
  if (k < 0) throw InputError("balanced_separator_exact: negative size bound");
  const Rational limit_r = gamma * Rational(static_cast<std::int64_t>(w.size()));
  const int limit = static_cast<int>(limit_r.numerator() / limit_r.denominator());
  const VertexSet all = all_vertices(g);
  for (int size = 0; size <= std::min(k, n); ++size) {
    // combinations of `size` vertices in lexicographic order
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet s(idx.begin(), idx.end());
      auto comps = components_within(g, set_difference(all, s));
      std::vector<int> weights;
      for (const auto& c : comps) weights.push_back(count_in(c, w));
      SubsetSum ss(weights);
      for (int a = std::min(limit, ss.total); a >= 0; --a) {
        if (ss.achievable(a) && ss.total - a <= limit) return assemble(comps, ss.pick(a), s);
      }
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

SparsityReport sparse_separator_oracle(const Graph& g, const VertexSet& u, const VertexSet& w,
                                       const Constants& cfg) {
  require_valid_set(g, u, "sparse_separator_oracle(u)");
  require_valid_set(g, w, "sparse_separator_oracle(w)");
  if (w.empty()) throw InputError("sparse_separator_oracle: empty W");
  if (!is_subset(w, u)) throw InputError("sparse_separator_oracle: W not inside U");
  require_connected_within(g, u, "sparse_separator_oracle");

  Candidate best;
  SparsityReport rep;
  rep.w = w;
  const int nu = static_cast<int>(u.size());
  if (nu <= cfg.exact_cut_cap) {
    rep.exact = true;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << nu); ++mask) {
      VertexSet s;
      for (int i = 0; i < nu; ++i) {
        if (mask >> i & 1U) s.push_back(u[i]);
      }
      Candidate c = best_split(g, u, s, w);
      if (c.valid && better(c, best)) best = std::move(c);
    }
  } else {
    std::vector<VertexSet> tried;
    auto consider = [&](VertexSet s) {
      if (std::find(tried.begin(), tried.end(), s) != tried.end()) return;
      Candidate c = best_split(g, u, s, w);
      if (c.valid && better(c, best)) best = std::move(c);
      tried.push_back(std::move(s));
    };
    for (Vertex x : w) consider({x});
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (g.adjacent(w[i], w[j])) continue;
        VertexSet cut = min_vertex_cut(g, w[i], w[j], u);
        if (!cut.empty()) consider(std::move(cut));
      }
    }
  }
  if (!best.valid) throw std::logic_error("sparse_separator_oracle: no separator evaluated");
  rep.sep = std::move(best.sep);
  rep.alpha = best.alpha;
  return rep;
}

Check validate_unsplittable(const Graph& g, const UnsplittableSet& x, const Constants& cfg) {
  for (const VertexSet* s : {&x.u, &x.w}) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      if (!g.valid((*s)[i])) return "unsplittable set has invalid vertex";
      if (i > 0 && (*s)[i - 1] >= (*s)[i]) return "unsplittable set not sorted";
    }
  }
  if (!is_connected_set(g, x.u)) return "U is not connected";
  if (!is_subset(x.w, x.u)) return "W is not a subset of U";
  if (x.s != cfg.separator_budget(x.k)) return "separator budget does not match k";
  const int wsz = static_cast<int>(x.w.size());
  if (wsz < 3 * x.s || wsz > 4 * x.s) return "|W| outside [3s, 4s]";
  if (x.alpha_lb <= 0) return "alpha_lb must be positive";
  if (validate_separator(g, x.u, x.witness)) return "witness is not a separator of U";
  Rational wa;
  try {
    wa = sparsity(g, x.witness, x.w);
  } catch (const InputError&) {
    return "witness sparsity undefined";
  }
  if (wa != x.alpha_witness) return "alpha_witness differs from the witness separator";
  // Case-1 inequality: |S'| |W0| > s |B' u S'|_W, with |W0| = 4s
  const int b_side = count_in(x.witness.b, x.w) + count_in(x.witness.s, x.w);
  const int a_side = count_in(x.witness.a, x.w) + count_in(x.witness.s, x.w);
  const int small_side = std::min(a_side, b_side);
  if (static_cast<long long>(x.witness.s.size()) * 4 * x.s <= static_cast<long long>(x.s) * small_side) {
    return "witness does not satisfy the unsplittable case condition";
  }
  if (x.exact) {
    if (x.alpha_lb != x.alpha_witness) return "exact alpha_lb must equal the witness sparsity";
    if (static_cast<int>(x.u.size()) <= cfg.exact_cut_cap) {
      auto rep = sparse_separator_oracle(g, x.u, x.w, cfg);
      if (rep.alpha < x.alpha_lb) return "a sparser separator exists than alpha_lb claims";
    }
  } else if (x.alpha_lb != x.alpha_witness / cfg.beta0) {
    return "heuristic alpha_lb must equal alpha_witness / beta0";
  }
  return std::nullopt;
}

RefineResult refine_or_unsplittable(const Graph& g, const VertexSet& u0, const VertexSet& w0, int k,
                                    const Constants& cfg) {
  require_valid_set(g, u0, "refine_or_unsplittable(u0)");
  require_valid_set(g, w0, "refine_or_unsplittable(w0)");
  if (k < 1) throw InputError("refine_or_unsplittable: k must be positive");
  const int s_budget = cfg.separator_budget(k);
  if (static_cast<int>(w0.size()) != 4 * s_budget) {
    throw InputError("refine_or_unsplittable: |W0| must equal 4s = " + std::to_string(4 * s_budget));
  }
  if (!is_subset(w0, u0)) throw InputError("refine_or_unsplittable: W0 not inside U0");
  require_connected_within(g, u0, "refine_or_unsplittable");

  const int w0n = static_cast<int>(w0.size());
  VertexSet u = u0;
  VertexSet s_acc;
  while (true) {
    VertexSet w = set_intersection(w0, u);
    SparsityReport rep = sparse_separator_oracle(g, u, w, cfg);
    Separator sep = rep.sep;
    int a_side = count_in(sep.a, w) + count_in(sep.s, w);
    int b_side = count_in(sep.b, w) + count_in(sep.s, w);
    if (b_side > a_side) {
      std::swap(sep.a, sep.b);
      std::swap(a_side, b_side);
    }
    // Case 1: the cut is too expensive for the W-mass it discards
    if (static_cast<long long>(sep.s.size()) * w0n > static_cast<long long>(s_budget) * b_side) {
      UnsplittableSet out;
      out.u = u;
      out.w = w;
      out.k = k;
      out.s = s_budget;
      out.alpha_witness = rep.alpha;
      out.witness = sep;
      out.exact = rep.exact;
      out.alpha_lb = rep.exact ? rep.alpha : rep.alpha / cfg.beta0;
      return out;
    }
    // Case 2
    s_acc = set_union(s_acc, sep.s);
    std::optional<VertexSet> heavy;
    for (auto& c : components_within(g, set_difference(u, s_acc))) {
      if (4 * count_in(c, w0) >= 3 * w0n) {
        heavy = std::move(c);
        break;
      }
    }
    if (!heavy) break;
    if (heavy->size() >= u.size()) throw std::logic_error("refine_or_unsplittable: no progress");
    u = std::move(*heavy);
  }

  auto comps = components_within(g, set_difference(u0, s_acc));
  std::vector<int> weights;
  for (const auto& c : comps) weights.push_back(count_in(c, w0));
  SubsetSum ss(weights);
  const int limit = 3 * w0n / 4;
  for (int a = std::min(limit, ss.total); a >= 0; --a) {
    if (ss.achievable(a) && ss.total - a <= limit) return assemble(comps, ss.pick(a), s_acc);
  }
  throw std::logic_error("refine_or_unsplittable: accumulated separator is not 3/4-balanced");
}

namespace {

struct DecompBuilder {
  const Graph& g;
  int k;
  int s;
  const Constants& cfg;
  std::vector<VertexSet> bags;
  std::vector<Edge> edges;
  std::optional<UnsplittableSet> failure;

  // Decomposes g[x] (x connected) with a root bag containing `boundary`.
  // Returns the root node index, or -1 on failure.
  int run(const VertexSet& x, const VertexSet& boundary) {
    if (static_cast<int>(x.size()) <= 5 * s + 1) {
      bags.push_back(x);
      return static_cast<int>(bags.size()) - 1;
    }
    VertexSet w = boundary;
    for (Vertex v : x) {
      if (static_cast<int>(w.size()) >= 4 * s) break;
      if (!contains(boundary, v)) w.push_back(v);
    }
    w = make_set(std::move(w));
    RefineResult r = refine_or_unsplittable(g, x, w, k, cfg);
    if (auto* bad = std::get_if<UnsplittableSet>(&r)) {
      failure = std::move(*bad);
      return -1;
    }
    const Separator& sep = std::get<Separator>(r);
    VertexSet bag = set_union(w, sep.s);
    bags.push_back(bag);
    int node = static_cast<int>(bags.size()) - 1;
    for (const auto& c : components_within(g, set_difference(x, bag))) {
      VertexSet nb = set_intersection(neighborhood(g, c), x);
      VertexSet child = set_union(c, nb);
      if (child.size() >= x.size()) throw std::logic_error("decompose: child does not shrink");
      int sub = run(child, nb);
      if (sub < 0) return -1;
      edges.push_back(make_edge(node, sub));
    }
    return node;
  }
};

}  // namespace

DecomposeResult decompose_or_unsplittable(const Graph& g, int k, const Constants& cfg) {
  if (k < 1) throw InputError("decompose_or_unsplittable: k must be positive");
  DecompBuilder b{g, k, cfg.separator_budget(k), cfg, {}, {}, std::nullopt};
  int prev_root = -1;
  for (const auto& comp : components(g)) {
    int root = b.run(comp, {});
    if (root < 0) return std::move(*b.failure);
    if (prev_root >= 0) b.edges.push_back(make_edge(prev_root, root));
    prev_root = root;
  }
  if (b.bags.empty()) b.bags.emplace_back();
  return make_decomposition(std::move(b.bags), std::move(b.edges));
}

DoublingResult doubling_driver(const Graph& g, const Constants& cfg) {
  DoublingResult out;
  for (int k = 1;; k *= 2) {
    DecomposeResult r = decompose_or_unsplittable(g, k, cfg);
    if (auto* td = std::get_if<TreeDecomposition>(&r)) {
      out.success_k = k;
      out.td = std::move(*td);
      return out;
    }
    out.failed_k = k;
    out.witness = std::move(std::get<UnsplittableSet>(r));
    if (k > g.n()) throw std::logic_error("doubling_driver: no decomposition at k > n");
  }
}

ApproxTreewidth approximate_treewidth(const Graph& g, const Constants& cfg) {
  ApproxTreewidth out;
  out.td = doubling_driver(g, cfg).td;
  out.bracket.k1 = out.td.width;
  out.bracket.c0 = cfg.c0;
  out.bracket.k2 = bracket_k2(out.bracket.k1, cfg.c0);
  return out;
}

}  // namespace bk
