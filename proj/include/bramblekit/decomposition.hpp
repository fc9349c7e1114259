#pragma once

#include <vector>

#include "bramblekit/constants.hpp"
#include "bramblekit/graph.hpp"

namespace bk {

struct TreeDecomposition {
  Graph tree;                   // nodes 0..bags.size()-1
  std::vector<VertexSet> bags;  // sorted
  int width = -1;               // max |bag| - 1 as claimed by the producer

  int computed_width() const;
};

/// Builds a decomposition from bags and tree edges, filling in the width.
TreeDecomposition make_decomposition(std::vector<VertexSet> bags, std::vector<Edge> tree_edges);

/// First violated condition (vertex cover, edge cover, connected traces,
/// tree shape, width) or nullopt.
Check validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// Decomposition induced by an elimination order (first entry eliminated first).
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);

struct ExactTreewidth {
  int width = -1;
  TreeDecomposition td;
};

/// Subset DP over elimination orders. Throws CapacityError above `cap` vertices.
ExactTreewidth exact_treewidth(const Graph& g, int cap = 18);

/// Maps a decomposition of an induced subgraph back to host identifiers.
TreeDecomposition lift_decomposition(const TreeDecomposition& td, const std::vector<Vertex>& to_host);

/// Joins decompositions of disjoint vertex sets into one by chaining their
/// first nodes. An empty list yields a single empty bag.
TreeDecomposition join_decompositions(const std::vector<TreeDecomposition>& parts);

struct WidthBracket {
  int k1 = -1;  // width of the constructed decomposition
  int k2 = 0;   // floor(k1 / (c0 sqrt(log2 k1))), conditional on c0
  Rational c0{1};
};

struct ApproxTreewidth {
  WidthBracket bracket;
  TreeDecomposition td;
};

/// Doubling driver per connected component; k2 is a conditional lower bound.
ApproxTreewidth approximate_treewidth(const Graph& g, const Constants& cfg);

int bracket_k2(int k1, const Rational& c0);

}  // namespace bk
