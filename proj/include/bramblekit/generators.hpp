#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bramblekit/graph.hpp"

namespace bk {

/// l x l grid; vertex (row, col) has identifier row * l + col.
Graph grid(int l);
Graph complete(int n);
Graph path_graph(int n);
/// Uniform simple graph with exactly m edges; deterministic in (n, m, seed).
Graph random_graph(int n, int m, std::uint64_t seed);

/// Vertices of row r / column c of grid(l).
VertexSet grid_row(int l, int r);
VertexSet grid_column(int l, int c);

/// Generator dispatch used by the CLI: kind in {grid, complete, path, random}.
Graph generate(const std::string& kind, const std::vector<long long>& params,
               std::uint64_t seed = 0);

}  // namespace bk
