#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bramblekit/bramble.hpp"
#include "bramblekit/constants.hpp"
#include "bramblekit/graph.hpp"
#include "bramblekit/gridlike.hpp"

namespace bk {

/// Elements are subgraphs: a vertex set with the edges that belong to it.
struct PerfectBramble {
  std::vector<VertexSet> elements;
  std::vector<std::vector<Edge>> edges;  // per element, sorted
  std::optional<OrderCertificate> order;
};

/// Union of the element subgraphs, host numbering.
struct HostUnion {
  VertexSet vertices;
  std::vector<Edge> edges;

  /// Local graph on `vertices` (index i is vertices[i]).
  Graph local() const;
};

HostUnion host_union(const PerfectBramble& pb);

/// Connected elements of g, pairwise intersecting, every vertex in at most
/// two elements, maximum degree 4 in the union.
Check validate_perfect(const Graph& g, const PerfectBramble& pb);

/// One element per branch set of the K_order model: the union of the family
/// paths whose intersection-graph vertices lie in that branch set. Subdivision
/// interiors are assigned to the lower template endpoint.
PerfectBramble perfect_from_gridlike(const Graph& g, const GridLikeMinor& glm);

/// Element i is T_i, trimmed to the attachments of its paths, with the first
/// half of each Q_ij up to the vertex at index ceil(len/2) counted from the
/// lower-index tree; that vertex belongs to both elements.
PerfectBramble perfect_from_k2k_model(const Graph& g, const CliqueLinkage& cl);

struct StructureReport {
  int k = 0;  // number of elements
  bool vertices_per_element = false;  // >= k - 1
  bool private_edges = false;         // >= k - 2 per element
  bool union_size = false;            // >= k(k-1)/2 vertices, >= k(k-2) edges
  bool exact_order = false;           // order == ceil(k/2)
  bool treewidth = false;             // tw(H) >= ceil(k/2) - 1, true when skipped
  int order = -1;
  std::optional<int> treewidth_value;  // absent when H exceeds the exact cap
  std::string details;

  bool all() const { return vertices_per_element && private_edges && union_size && exact_order && treewidth; }
};

StructureReport check_perfect_structure(const PerfectBramble& pb, const Constants& cfg = {});

struct BoundedDegreeResult {
  std::optional<PerfectBramble> bramble;
  HostUnion host;
  int order = 0;  // certified order of the bramble
  std::string route;  // "gridlike", "clique-minor" or "failure"
  PipelineResult pipeline;
};

/// Subgraph of maximum degree 4 carrying a perfect bramble of the given order:
/// web of order 2*order, then a grid-like minor or a K_{2 order} minor.
BoundedDegreeResult bounded_degree_subgraph(const Graph& g, int order, const Constants& cfg, std::uint64_t seed);

}  // namespace bk
