#include <doctest.h>

#include <sstream>

#include "bramblekit/generators.hpp"
#include "bramblekit/io.hpp"
#include "oracles.hpp"

using namespace bk;

namespace {

// Smallest vertex set (terminals allowed) meeting every a-b path.
int menger_oracle(const Graph& g, const VertexSet& a, const VertexSet& b) {
  const auto adj = oracle::adjacency(g);
  const int n = g.n();
  int best = n;
  for (oracle::Mask s = 0; s < (oracle::Mask{1} << n); ++s) {
    if (oracle::popcount(s) >= best) continue;
    oracle::Mask seen = oracle::mask_of(a) & ~s;
    oracle::Mask frontier = seen;
    while (frontier) {
      oracle::Mask next = 0;
      for (oracle::Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= ~s & ~seen;
      seen |= next;
      frontier = next;
    }
    if ((seen & oracle::mask_of(b)) == 0) best = oracle::popcount(s);
  }
  return best;
}

}  // namespace

TEST_CASE("graph construction normalises and rejects bad input") {
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(g.m() == 2);
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {0, 1}}), InputError);
  std::vector<std::pair<Vertex, Vertex>> pairs{{1, 0}, {0, 1}};
  CHECK(Graph::from_pairs(2, pairs).m() == 1);
}

TEST_CASE("generators") {
  Graph g = grid(4);
  CHECK(g.n() == 16);
  CHECK(g.m() == 24);
  CHECK(g.adjacent(5, 6));
  CHECK(g.adjacent(5, 9));
  CHECK(grid_row(4, 1) == VertexSet{4, 5, 6, 7});
  CHECK(grid_column(4, 2) == VertexSet{2, 6, 10, 14});
  CHECK(complete(6).m() == 15);
  CHECK(path_graph(5).m() == 4);
  Graph r1 = random_graph(20, 40, 7);
  CHECK(r1.m() == 40);
  CHECK(r1 == random_graph(20, 40, 7));
  CHECK_FALSE(r1 == random_graph(20, 40, 8));
  CHECK_THROWS_AS(random_graph(4, 7, 0), InputError);
  CHECK_THROWS_AS(generate("torus", {3}), InputError);
  CHECK(generate("grid", {3}) == grid(3));
}

TEST_CASE("set helpers") {
  VertexSet a = make_set({3, 1, 2, 3});
  CHECK(a == VertexSet{1, 2, 3});
  VertexSet b{2, 5};
  CHECK(set_union(a, b) == VertexSet{1, 2, 3, 5});
  CHECK(set_intersection(a, b) == VertexSet{2});
  CHECK(set_difference(a, b) == VertexSet{1, 3});
  CHECK(intersects(a, b));
  CHECK(is_subset(VertexSet{1, 3}, a));
  CHECK_THROWS_AS(require_valid_set(path_graph(3), VertexSet{2, 1}, "s"), InputError);
}

TEST_CASE("components and induced subgraphs") {
  Graph g = path_graph(5);
  auto comps = components(g, {2});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0, 1});
  CHECK(comps[1] == VertexSet{3, 4});
  CHECK(neighborhood(g, {1, 2}) == VertexSet{0, 3});
  Subgraph s = induced_subgraph(grid(3), {0, 1, 3, 4});
  CHECK(s.graph.m() == 4);
  CHECK(s.host(3) == 4);
  CHECK(is_connected_set(g, {1, 2, 3}));
  CHECK_FALSE(is_connected_set(g, {1, 3}));
}

TEST_CASE("disjoint paths meet the Menger bound") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(10, 14 + static_cast<int>(seed % 10), seed);
    VertexSet a{0, 1, 2};
    VertexSet b{7, 8, 9};
    DisjointPaths dp = disjoint_paths(g, a, b);
    CHECK(static_cast<int>(dp.paths.size()) == menger_oracle(g, a, b));
    CHECK(dp.separator.size() == dp.paths.size());
    VertexSet used;
    for (const auto& p : dp.paths) {
      CHECK_FALSE(check_path(g, p));
      CHECK(contains(a, p.front()));
      CHECK(contains(b, p.back()));
      for (Vertex v : p) {
        CHECK_FALSE(contains(used, v));
        used = set_union(used, {v});
      }
    }
  }
}

TEST_CASE("min vertex cut") {
  Graph g = grid(4);
  VertexSet cut = min_vertex_cut(g, 0, 15, all_vertices(g));
  CHECK(cut.size() == 2);
  CHECK_THROWS_AS(min_vertex_cut(g, 0, 1, all_vertices(g)), InputError);
}

TEST_CASE("minor and subdivision validators") {
  Graph k4 = complete(4);
  Graph g = grid(3);
  MinorModel m{{{0, 1, 2}, {3, 6}, {4}, {5, 7, 8}}};
  CHECK_FALSE(validate_minor_model(g, k4, m));
  MinorModel bad{{{0, 2}, {1}, {3}, {4}}};
  CHECK(validate_minor_model(g, k4, bad));
  SubdivisionModel s;
  s.branch_vertices = {0, 2};
  s.edge_paths = {{0, 1, {0, 1, 2}}};
  CHECK_FALSE(validate_subdivision(g, complete(2), s));
  s.edge_paths[0].path = {0, 4, 2};
  CHECK(validate_subdivision(g, complete(2), s));
}

TEST_CASE("edge list and DIMACS round trip") {
  Graph g = random_graph(12, 20, 3);
  for (GraphFormat f : {GraphFormat::Dimacs, GraphFormat::EdgeList}) {
    std::stringstream s;
    write_graph(s, g, f);
    CHECK(read_graph(s, f) == g);
  }
  std::istringstream iso("# n 5\n0 1\n");
  CHECK(read_edgelist(iso).n() == 5);
  std::istringstream dup("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n");
  CHECK(read_dimacs(dup).m() == 2);
  std::istringstream bad("p edge 2 1\ne 1 3\n");
  CHECK_THROWS_AS(read_dimacs(bad), InputError);
  std::istringstream junk("0 x\n");
  CHECK_THROWS_AS(read_edgelist(junk), InputError);
  CHECK(graph_hash(g) == graph_hash(random_graph(12, 20, 3)));
  CHECK(graph_hash(g).size() == 16);
  CHECK(graph_hash(g) != graph_hash(random_graph(12, 20, 4)));
}
