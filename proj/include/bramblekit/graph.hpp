#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bk {

using Vertex = int;

/// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

/// Ordered sequence of distinct vertices; consecutive entries adjacent.
using Path = std::vector<Vertex>;

/// Result of a validator: std::nullopt when the object is valid, otherwise a
/// human-readable description of the first violation found.
using Check = std::optional<std::string>;

/// Malformed or out-of-contract input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The instance exceeds a configured exhaustive-search cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Immutable undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, out-of-range endpoints or duplicates.
  Graph(int n, std::vector<Edge> edges);

  /// Like the constructor but silently drops duplicate edges.
  static Graph from_pairs(int n, std::span<const std::pair<Vertex, Vertex>> pairs);

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool adjacent(Vertex a, Vertex b) const;
  bool valid(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Induced subgraph with its identifier mapping (local id -> host id).
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;

  Vertex host(Vertex local) const { return to_host[local]; }
};

// --- vertex-set helpers -----------------------------------------------------

VertexSet make_set(std::vector<Vertex> members);
bool contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet all_vertices(const Graph& g);

/// Throws InputError unless every member is a vertex of g and the list is
/// sorted and duplicate-free.
void require_valid_set(const Graph& g, const VertexSet& s, const char* what);

// --- structure ---------------------------------------------------------------

Subgraph induced_subgraph(const Graph& g, const VertexSet& u);

/// Connected components of g minus `removed`, each sorted, ordered by minimum.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});

/// Connected components of g[allowed].
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& allowed);

bool is_connected_set(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

/// Open neighbourhood of s in g, restricted to vertices outside s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// Connectivity of a subgraph given by vertices and an explicit edge list.
bool is_connected_subgraph(const VertexSet& vertices, std::span<const Edge> edges);

Check check_path(const Graph& g, const Path& p);

/// Edges of a path as normalised pairs.
std::vector<Edge> path_edges(const Path& p);

/// Breadth-first shortest path from any source to any target inside
/// `allowed` (both endpoints must be in allowed). Empty if none.
Path shortest_path_within(const Graph& g, const VertexSet& sources, const VertexSet& targets,
                          const std::vector<char>& allowed);

// --- minor models ------------------------------------------------------------

/// Branch set per vertex of a template graph.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
};

struct SubdivisionEdge {
  int a = 0;  // template vertices, a < b
  int b = 0;
  Path path;  // from branch[a] to branch[b]
};

struct SubdivisionModel {
  std::vector<Vertex> branch_vertices;
  std::vector<SubdivisionEdge> edge_paths;
};

Check validate_minor_model(const Graph& host, const Graph& templ, const MinorModel& model);
Check validate_subdivision(const Graph& host, const Graph& templ, const SubdivisionModel& model);

// --- disjoint paths ----------------------------------------------------------

struct DisjointPaths {
  std::vector<Path> paths;  // pairwise vertex-disjoint a-b paths
  VertexSet separator;      // |separator| == paths.size(), separates a from b
};

/// Maximum family of vertex-disjoint a-b paths whose internal vertices avoid
/// a, b and internal_forbidden, with a Menger separator of equal size.
DisjointPaths disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b,
                             const VertexSet& internal_forbidden = {});

/// Minimum vertex cut separating x from y (x, y non-adjacent, not in the cut),
/// restricted to g[allowed].
VertexSet min_vertex_cut(const Graph& g, Vertex x, Vertex y, const VertexSet& allowed);

}  // namespace bk
