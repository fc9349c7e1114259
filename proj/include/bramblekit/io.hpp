#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "bramblekit/graph.hpp"

namespace bk {

enum class GraphFormat { Dimacs, EdgeList };

GraphFormat parse_format(const std::string& name);
std::string format_name(GraphFormat f);

/// DIMACS edge format: `p edge n m` header, `e u v` lines (1-based), `c`
/// comments. Repeated edges are merged.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

/// Plain edge list: one `u v` pair per line, 0-based. `#` lines are comments;
/// a `# n <count>` comment fixes the vertex count (isolated vertices).
Graph read_edgelist(std::istream& in);
void write_edgelist(std::ostream& out, const Graph& g);

Graph read_graph(std::istream& in, GraphFormat f);
void write_graph(std::ostream& out, const Graph& g, GraphFormat f);
Graph read_graph_file(const std::string& path, GraphFormat f);

/// FNV-1a 64-bit hash of the canonical edge list, as 16 hex digits.
std::string graph_hash(const Graph& g);

}  // namespace bk
