#include <doctest.h>

#include "bramblekit/decomposition.hpp"
#include "bramblekit/generators.hpp"
#include "bramblekit/perfect.hpp"
#include "oracles.hpp"

using namespace bk;

namespace {

// Rows and columns of grid(4) as the two families; the K4 model takes one
// row-column pair per branch set.
GridLikeMinor grid4_gridlike() {
  std::vector<Path> rows;
  std::vector<Path> cols;
  for (int i = 0; i < 4; ++i) {
    VertexSet r = grid_row(4, i);
    VertexSet c = grid_column(4, i);
    rows.push_back(Path(r.begin(), r.end()));
    cols.push_back(Path(c.begin(), c.end()));
  }
  GridLikeMinor glm{intersection_graph(rows, cols), 4, MinorModel{}, std::nullopt};
  for (int i = 0; i < 4; ++i) glm.model->branch_sets.push_back({i, 4 + i});
  return glm;
}

}  // namespace

TEST_CASE("perfect bramble from the grid's rows and columns") {
  Graph g = grid(4);
  GridLikeMinor glm = grid4_gridlike();
  REQUIRE_FALSE(validate_gridlike(g, glm));
  PerfectBramble pb = perfect_from_gridlike(g, glm);
  CHECK(pb.elements.size() == 4);
  CHECK_FALSE(validate_perfect(g, pb));
  CHECK(oracle::is_bramble(g, pb.elements));
  CHECK(oracle::hitting_order(pb.elements) == 2);
  StructureReport rep = check_perfect_structure(pb);
  CHECK(rep.all());
  CHECK(rep.order == 2);
  REQUIRE(rep.treewidth_value);
  HostUnion hu = host_union(pb);
  CHECK(hu.vertices.size() == 16);
  CHECK(*rep.treewidth_value == 4);
}

TEST_CASE("perfect bramble validator") {
  Graph g = grid(4);
  PerfectBramble pb = perfect_from_gridlike(g, grid4_gridlike());
  PerfectBramble three = pb;
  three.elements.push_back(pb.elements[0]);
  three.edges.push_back(pb.edges[0]);
  CHECK(validate_perfect(g, three));  // vertices in three elements
  PerfectBramble apart = pb;
  apart.elements[1] = {15};
  apart.edges[1] = {};
  CHECK(validate_perfect(g, apart));
  PerfectBramble stray = pb;
  stray.edges[0].push_back({0, 5});
  CHECK(validate_perfect(g, stray));
  PerfectBramble claim = pb;
  claim.order = OrderCertificate{3, OrderMethod::ExactHittingSet};
  CHECK(validate_perfect(g, claim));
}

TEST_CASE("perfect bramble from a clique linkage") {
  const Constants cfg = Constants::desk();
  Graph g = complete(60);
  BoundedDegreeResult r = bounded_degree_subgraph(g, 2, cfg, 0);
  REQUIRE(r.bramble);
  CHECK(r.order == 2);
  CHECK(r.bramble->elements.size() == 4);
  CHECK_FALSE(validate_perfect(g, *r.bramble));
  CHECK(oracle::is_bramble(g, r.bramble->elements));
  Graph h = r.host.local();
  CHECK(h.max_degree() <= 4);
  StructureReport rep = check_perfect_structure(*r.bramble, cfg);
  CHECK(rep.all());
  CHECK(rep.order == oracle::hitting_order(r.bramble->elements));
}

TEST_CASE("bounded-degree subgraph fails cleanly on thin graphs") {
  const Constants cfg = Constants::desk();
  Graph g = path_graph(40);
  BoundedDegreeResult r = bounded_degree_subgraph(g, 2, cfg, 0);
  CHECK_FALSE(r.bramble);
  CHECK(r.route == "failure");
  REQUIRE(r.pipeline.counter_witness);
  CHECK_FALSE(validate_decomposition(g, *r.pipeline.counter_witness));
}
