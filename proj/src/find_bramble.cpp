#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "bramblekit/bramble.hpp"
#include "bramblekit/separators.hpp"

namespace bk {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for the draw indexed by (i, j).
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
  return std::mt19937_64(splitmix(splitmix(splitmix(seed) ^ i) ^ (j + 0x5bd1e995ULL)));
}

}  // namespace

FindBrambleResult find_bramble(const Graph& g, const Constants& cfg, std::uint64_t seed) {
  if (!is_connected(g)) throw InputError("find_bramble: graph must be connected");
  FindBrambleResult out;
  out.seed = seed;
  auto degenerate = [&](std::string why) {
    out.degenerate = true;
    out.note = std::move(why);
    if (g.n() > 0) out.bramble.elements.push_back(all_vertices(g));
    out.bramble.order = OrderCertificate{g.n() > 0 ? 1 : 0, OrderMethod::ExactHittingSet};
    out.validation = validate_bramble(g, out.bramble);
    return out;
  };
  if (g.n() == 0) return degenerate("empty graph");

  // 1. level k with its unsplittable set
  DoublingResult dr = doubling_driver(g, cfg);
  if (!dr.witness) return degenerate("no unsplittable set at any level");
  const UnsplittableSet& x = *dr.witness;
  out.k = x.k;
  out.u = x.u;
  out.w0 = x.w;

  // 2. maximum concurrent vertex flow on W0 inside g[U]
  Subgraph sub = induced_subgraph(g, x.u);
  VertexSet w0_local;
  for (Vertex v : x.w) {
    w0_local.push_back(static_cast<Vertex>(std::lower_bound(x.u.begin(), x.u.end(), v) - x.u.begin()));
  }
  ConcurrentFlow local = max_concurrent_flow(sub.graph, w0_local, cfg);
  out.flow = local;
  out.flow.w = x.w;
  for (auto& pf : out.flow.path_flows) {
    pf.u = sub.to_host[pf.u];
    pf.v = sub.to_host[pf.v];
    for (Vertex& v : pf.path) v = sub.to_host[v];
  }

  // 3. W: the first k vertices of W0
  const int k = x.k;
  out.w = VertexSet(x.w.begin(), x.w.begin() + std::min<std::size_t>(k, x.w.size()));

  // 4. d sets of size s
  out.d = static_cast<int>(std::floor(std::pow(static_cast<double>(k), 1.5)));
  out.s = static_cast<int>(std::floor(std::sqrt(static_cast<double>(k)) * std::log(static_cast<double>(k))));
  out.rounds = static_cast<int>(std::floor(std::log(static_cast<double>(g.n()))));
  if (out.s < 1 || out.s >= static_cast<int>(out.w.size())) {
    return degenerate("s = " + std::to_string(out.s) + " leaves no room for the sets S_i and z_i");
  }
  if (out.rounds < 1) return degenerate("floor(ln n) = 0");

  // 6. per-pair path distributions
  std::map<std::pair<Vertex, Vertex>, std::vector<const PathFlow*>> by_pair;
  for (const auto& pf : out.flow.path_flows) by_pair[{pf.u, pf.v}].push_back(&pf);

  for (int i = 0; i < out.d; ++i) {
    // 4./5. S_i and z_i
    auto rng = stream(seed, static_cast<std::uint64_t>(i), 0);
    std::vector<Vertex> pool = out.w;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Vertex> si(pool.begin(), pool.begin() + out.s);
    std::vector<Vertex> rest(pool.begin() + out.s, pool.end());
    std::sort(si.begin(), si.end());
    std::sort(rest.begin(), rest.end());
    Vertex z = rest[std::uniform_int_distribution<std::size_t>(0, rest.size() - 1)(rng)];
    // 7. B_{i,j}
    for (int j = 1; j <= out.rounds; ++j) {
      auto prng = stream(seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j));
      VertexSet element{z};
      for (Vertex u : si) {
        const auto& options = by_pair[{z, u}];
        if (options.empty()) continue;
        std::vector<double> weights;
        for (const PathFlow* pf : options) weights.push_back(pf->amount.convert_to<double>());
        std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
        element = set_union(element, make_set(options[pick(prng)]->path));
      }
      out.bramble.elements.push_back(std::move(element));
    }
  }
  out.validation = validate_bramble(g, out.bramble);
  if (!out.validation) out.bramble.order = certified_order(out.bramble.elements, cfg);
  return out;
}

}  // namespace bk
