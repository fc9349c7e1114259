#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bramblekit/constants.hpp"
#include "bramblekit/decomposition.hpp"
#include "bramblekit/graph.hpp"
#include "bramblekit/perfect.hpp"

namespace bk {

struct WidthSolution {
  int value = 0;
  std::vector<Vertex> witness;  // cover set or path, by parameter
};

/// Minimum vertex cover by dynamic programming over the bags.
/// Throws CapacityError when a bag exceeds max_bag vertices.
WidthSolution vc_width_dp(const Graph& g, const TreeDecomposition& td, int max_bag = 20);

/// Longest simple path (length in edges) by dynamic programming over partial
/// path systems in the bags. Throws CapacityError when a bag exceeds max_bag.
WidthSolution longest_path_width_dp(const Graph& g, const TreeDecomposition& td, int max_bag = 10);

Check check_vertex_cover(const Graph& g, const std::vector<Vertex>& cover);

/// Exhaustive references for small graphs (n <= 24 and n <= 12 respectively).
int brute_force_vertex_cover(const Graph& g);
int brute_force_longest_path(const Graph& g);

struct ParameterPlugin {
  std::string name;
  bool subgraph_monotone = true;
  Rational c{0};  // declared pi(H) >= c * m^alpha for m elements
  int alpha = 1;
  std::string basis;  // which structural facts the bound uses
  std::function<int(int)> bramble_lower_bound;  // element count -> guaranteed value
  std::function<WidthSolution(const Graph&, const TreeDecomposition&)> width_solver;
  std::function<Check(const Graph&, const WidthSolution&)> check_witness;
};

ParameterPlugin vertex_cover_plugin();
ParameterPlugin longest_path_plugin();
ParameterPlugin plugin_by_name(const std::string& name);  // "vc" or "longest-path"

struct DichotomyResult {
  std::string verdict;  // "greater" (pi(G) > k) or "at-most" (pi(G) <= k)
  std::string branch;   // "bramble" or "width"
  int k = 0;
  std::optional<int> value;  // exact value on the width branch
  int bound = 0;             // guaranteed value on the bramble branch
  int bramble_order = 0;
  WidthSolution solution;
  std::optional<PerfectBramble> bramble;
  std::optional<TreeDecomposition> decomposition;
  std::string note;
};

/// Perfect bramble with plugin bound above k, else a decomposition and the
/// width solver.
DichotomyResult decide(const Graph& g, const ParameterPlugin& plugin, int k, const Constants& cfg,
                       std::uint64_t seed);

/// Re-checks a verdict: bramble validity and plugin bound, or the witness.
Check validate_dichotomy(const Graph& g, const ParameterPlugin& plugin, const DichotomyResult& r);

}  // namespace bk
