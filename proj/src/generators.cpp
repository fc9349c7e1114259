#include "bramblekit/generators.hpp"

#include <random>
#include <set>

namespace bk {

Graph grid(int l) {
  if (l <= 0) throw InputError("grid: side must be positive");
  std::vector<Edge> edges;
  for (int r = 0; r < l; ++r) {
    for (int c = 0; c < l; ++c) {
      int v = r * l + c;
      if (c + 1 < l) edges.push_back({v, v + 1});
      if (r + 1 < l) edges.push_back({v, v + l});
    }
  }
  return Graph(l * l, std::move(edges));
}

Graph complete(int n) {
  if (n <= 0) throw InputError("complete: size must be positive");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  if (n <= 0) throw InputError("path: length must be positive");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph random_graph(int n, int m, std::uint64_t seed) {
  if (n <= 0) throw InputError("random: n must be positive");
  long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > max_m) throw InputError("random: m out of range");
  std::mt19937_64 rng(seed);
  std::set<Edge> chosen;
  if (2LL * m > max_m) {
    // dense: sample the complement
    std::set<Edge> dropped;
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (static_cast<long long>(dropped.size()) < max_m - m) {
      int a = pick(rng);
      int b = pick(rng);
      if (a != b) dropped.insert(make_edge(a, b));
    }
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!dropped.count({a, b})) chosen.insert({a, b});
      }
    }
  } else {
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (static_cast<int>(chosen.size()) < m) {
      int a = pick(rng);
      int b = pick(rng);
      if (a != b) chosen.insert(make_edge(a, b));
    }
  }
  return Graph(n, std::vector<Edge>(chosen.begin(), chosen.end()));
}

VertexSet grid_row(int l, int r) {
  VertexSet s;
  for (int c = 0; c < l; ++c) s.push_back(r * l + c);
  return s;
}

VertexSet grid_column(int l, int c) {
  VertexSet s;
  for (int r = 0; r < l; ++r) s.push_back(r * l + c);
  return s;
}

Graph generate(const std::string& kind, const std::vector<long long>& params, std::uint64_t seed) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw InputError("generate " + kind + ": expected " + std::to_string(k) + " parameter(s)");
    }
    for (long long p : params) {
      if (p <= 0 || p > 1'000'000) throw InputError("generate " + kind + ": parameter out of range");
    }
  };
  if (kind == "grid") {
    need(1);
    if (params[0] > 1000) throw InputError("generate grid: side too large");
    return grid(static_cast<int>(params[0]));
  }
  if (kind == "complete") {
    need(1);
    if (params[0] > 5000) throw InputError("generate complete: size too large");
    return complete(static_cast<int>(params[0]));
  }
  if (kind == "path") {
    need(1);
    return path_graph(static_cast<int>(params[0]));
  }
  if (kind == "random") {
    if (params.size() != 2 || params[0] <= 0 || params[1] < 0) {
      throw InputError("generate random: expected n m");
    }
    return random_graph(static_cast<int>(params[0]), static_cast<int>(params[1]), seed);
  }
  throw InputError("unknown generator kind: " + kind);
}

}  // namespace bk
