#pragma once

#include <variant>
#include <vector>

#include "bramblekit/constants.hpp"
#include "bramblekit/decomposition.hpp"
#include "bramblekit/graph.hpp"

namespace bk {

/// A tree given by its vertex set and edges (all edges of the host graph).
struct TreeSubgraph {
  VertexSet vertices;
  std::vector<Edge> edges;

  friend bool operator==(const TreeSubgraph&, const TreeSubgraph&) = default;
};

Check check_tree(const Graph& g, const TreeSubgraph& t);
/// Degree of v inside t.
int tree_degree(const TreeSubgraph& t, Vertex v);
/// Smallest subtree of t containing every vertex of `keep` (keep nonempty).
TreeSubgraph minimal_subtree(const TreeSubgraph& t, const VertexSet& keep);

struct Linkage {
  int i = 0;  // i < j
  int j = 0;
  std::vector<Path> paths;  // from flats[i] to flats[j]
};

struct KWeb {
  int k = 1;
  int h = 1;
  TreeSubgraph tree;
  std::vector<VertexSet> subtrees;  // vertex sets of T_1..T_h
  std::vector<VertexSet> flats;     // A_i inside T_i
  VertexSet body;
  std::vector<Linkage> linkages;    // one per pair, lexicographic
};

Check validate_web(const Graph& g, const KWeb& web);

/// min(k, h) - 1; throws InputError when the web does not validate.
int web_width_lower_bound(const Graph& g, const KWeb& web);

/// l disjoint subtrees of t, each holding exactly k members of x. Requires
/// |x| >= 2kl, x inside t. Returned as vertex sets.
std::vector<VertexSet> split_flat_subtrees(const TreeSubgraph& t, const VertexSet& x, int k, int l);

struct WebStats {
  int iterations = 0;
  int growth_steps = 0;
  int split_steps = 0;
};

using WebOrDecomposition = std::variant<KWeb, TreeDecomposition>;

/// Pre-web refinement: a k-web of order h, or a decomposition of width at
/// most (2h + 1)k - 2. With cfg.debug_validate every intermediate pre-web is
/// checked and a violation throws std::logic_error.
WebOrDecomposition build_web_or_decomposition(const Graph& g, int k, int h, const Constants& cfg,
                                              WebStats* stats = nullptr);

}  // namespace bk
