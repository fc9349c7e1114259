#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bramblekit/constants.hpp"
#include "bramblekit/decomposition.hpp"
#include "bramblekit/graph.hpp"
#include "bramblekit/web.hpp"

namespace bk {

/// Bipartite intersection graph: vertices 0..|left|-1 are the left paths,
/// |left|.. the right paths; an edge when two paths share a host vertex.
struct IntersectionGraph {
  std::vector<Path> left;
  std::vector<Path> right;
  Graph base;
};

IntersectionGraph intersection_graph(const std::vector<Path>& p, const std::vector<Path>& q);

struct GridLikeMinor {
  IntersectionGraph ig;
  int order = 0;
  std::optional<MinorModel> model;               // K_order in ig.base
  std::optional<SubdivisionModel> subdivision;  // present iff topological

  bool topological() const { return subdivision.has_value(); }
};

Check validate_gridlike(const Graph& g, const GridLikeMinor& glm);

// --- TOP-MINOR --------------------------------------------------------------

struct TopMinorResult {
  std::optional<SubdivisionModel> model;  // K_p subdivision in g
  std::string stage;    // "done" or the failing stage
  std::string message;
  VertexSet g1;         // vertices of the highly connected subgraph
  std::vector<Vertex> x;
};

/// Stages: density, connectivity, selection, linkage, index-selection, paths.
TopMinorResult top_minor(const Graph& g, int p, const Constants& cfg);

// --- transversals -----------------------------------------------------------

struct CnfInstance {
  int num_vars = 0;
  int t = 0;  // bits per class; 0 for formulas not built by the encoder
  std::vector<std::vector<int>> clauses;  // literals +-(var + 1)
  std::vector<Edge> edge_origin;          // host edge per clause (encoder only)
  std::vector<std::vector<Vertex>> kept;  // class members kept, by index
};

/// One clause per edge between kept members of different classes, forbidding
/// both endpoints' t-bit indices at once. Classes are truncated to 2^t members,
/// t = floor(log2 of the smallest class).
CnfInstance encode_transversal_cnf(const Graph& h, const std::vector<VertexSet>& classes);

bool evaluate_clause(const std::vector<int>& clause, const std::vector<char>& assignment);
bool evaluate_cnf(const CnfInstance& f, const std::vector<char>& assignment);

/// Largest number of other clauses sharing a variable with a single clause.
int max_clause_neighbors(const CnfInstance& f);

struct MoserResult {
  bool satisfied = false;
  std::vector<char> assignment;
  long long resamples = 0;
  int max_neighbors = 0;
  bool bound_holds = false;  // every clause has <= 2^{w-5} - 1 neighbours, w its width
  std::string report;
};

MoserResult moser_resample(const CnfInstance& f, std::uint64_t seed, long long iteration_cap);

/// Picks decoded from an assignment; -1 where the index falls outside the class.
std::vector<Vertex> decode_transversal(const CnfInstance& f, const std::vector<char>& assignment);

struct TransversalResult {
  std::optional<std::vector<Vertex>> picks;  // one per class, independent
  std::string method;  // "lll", "greedy" or "none"
  bool lll_condition = false;
  bool greedy_condition = false;
  long long resamples = 0;
  std::string report;
};

Check check_transversal(const Graph& h, const std::vector<VertexSet>& classes, const std::vector<Vertex>& picks);

TransversalResult lll_transversal(const Graph& h, const std::vector<VertexSet>& classes, int d,
                                  std::uint64_t seed, const Constants& cfg = {});

// --- pipeline ---------------------------------------------------------------

/// l horizontal paths of l-1 vertices and one vertical edge per pair; maximum
/// degree 3. Vertex (i, j), j != i, sits on path i and meets path j.
struct HorizontalTemplate {
  int l = 0;
  Graph graph;
  std::vector<std::vector<Vertex>> rows;     // rows[i] = vertices of path i in order
  std::vector<std::pair<int, int>> vertical_pairs;
  std::vector<Edge> vertical_edges;
};

HorizontalTemplate horizontal_template(int l);

/// Topological grid-like minor of order l from a K_h model with h >= l(l-1).
GridLikeMinor gridlike_from_clique_minor(const Graph& g, const MinorModel& model, int l);

struct CliqueLinkage {
  std::vector<TreeSubgraph> trees;
  std::vector<Linkage> qpaths;  // one path per pair i < j, from T_i to T_j
};

struct PipelineResult {
  std::string outcome;  // "gridlike", "clique-minor" or "failure"
  std::string stage;
  std::string message;
  int p = 0;
  int h = 0;
  int k = 0;
  std::optional<GridLikeMinor> gridlike;
  std::optional<MinorModel> clique_minor;  // K_h
  std::optional<CliqueLinkage> linkage;
  std::optional<TreeDecomposition> counter_witness;
  std::vector<std::string> log;
};

/// Web of order h with linkage width k, then dense pairs through TOP-MINOR
/// (yielding a grid-like minor of order p) or a transversal (yielding a K_h
/// minor). Used by gridlike_pipeline and the perfect-bramble constructors.
PipelineResult web_minor_stages(const Graph& g, int p, int h, int k, const Constants& cfg, std::uint64_t seed);

/// h = max(2, p(p-1)), k = max(h(h-1)/2, ceil(c_web h^2 p^2)); a K_h minor is
/// converted through the horizontal template into order p.
PipelineResult gridlike_pipeline(const Graph& g, int p, const Constants& cfg, std::uint64_t seed);

}  // namespace bk
