#include <doctest.h>

#include "bramblekit/generators.hpp"
#include "bramblekit/witness.hpp"

using namespace bk;

TEST_CASE("constants round trip and reject bad input") {
  const Constants desk = Constants::desk();
  CHECK(constants_from_json(constants_to_json(desk)) == desk);
  CHECK(constants_from_json(Json::object()) == desk);
  Json j = constants_to_json(desk);
  j["beta1"] = "0.5";
  j["beta2"] = "1/2";
  CHECK(constants_from_json(j).beta1 == Rational(1, 2));
  CHECK_THROWS_AS(constants_from_json(Json{{"nope", 1}}), InputError);
  CHECK_THROWS_AS(constants_from_json(Json{{"beta1", "1/1000"}}), InputError);
  CHECK_THROWS_AS(constants_from_json(Json::array()), InputError);
  CHECK(constants_to_json(Constants::proof())["beta1"] == "18");
}

TEST_CASE("payload round trips") {
  const Constants cfg = Constants::desk();
  Graph g = grid(4);
  Bramble b = grid_bramble(4);
  b.order = certified_order(b.elements, cfg);
  Bramble b2 = bramble_from_json(bramble_to_json(b));
  CHECK(b2.elements == b.elements);
  CHECK(b2.order == b.order);
  TreeDecomposition td = exact_treewidth(g).td;
  TreeDecomposition td2 = decomposition_from_json(decomposition_to_json(td, true));
  CHECK(td2.bags == td.bags);
  CHECK(td2.tree == td.tree);
  CHECK(td2.width == td.width);
  auto wd = build_web_or_decomposition(complete(40), 2, 2, cfg);
  REQUIRE(std::holds_alternative<KWeb>(wd));
  const KWeb& w = std::get<KWeb>(wd);
  KWeb w2 = web_from_json(web_to_json(w));
  CHECK(web_to_json(w2) == web_to_json(w));
  BoundedDegreeResult r = bounded_degree_subgraph(complete(60), 2, cfg, 0);
  REQUIRE(r.bramble);
  PerfectBramble pb = perfect_from_json(perfect_to_json(*r.bramble, cfg));
  CHECK(pb.elements == r.bramble->elements);
  CHECK(pb.edges == r.bramble->edges);
}

TEST_CASE("witness documents verify and reject corruption") {
  const Constants cfg = Constants::desk();
  Graph g = grid(3);
  Json doc = make_witness(g, "edgelist", "tree-decomposition", decomposition_to_json(exact_treewidth(g).td, true),
                          "exact-treewidth", 0, cfg);
  CHECK(doc["provenance"]["validation"] == "ok");
  CHECK_FALSE(verify_witness(g, doc));
  CHECK(verify_witness(grid(4), doc));
  Json extra = doc;
  extra["comment"] = "hi";
  CHECK(verify_witness(g, extra));
  Json wrong_kind = doc;
  wrong_kind["kind"] = "bramble";
  CHECK(verify_witness(g, wrong_kind));
  Json narrower = doc;
  narrower["payload"]["width"] = 2;
  CHECK(verify_witness(g, narrower));
  Json loose = doc;
  loose["payload"]["bags"] = Json::array({Json::array({0, 1, 2, 3, 4, 5, 6, 7, 8})});
  loose["payload"]["tree_edges"] = Json::array();
  loose["payload"]["width"] = 8;
  CHECK(verify_witness(g, loose));  // valid but not exact
  loose["payload"]["exact"] = false;
  CHECK_FALSE(verify_witness(g, loose));
}

TEST_CASE("order claims are re-checked") {
  const Constants cfg = Constants::desk();
  Graph g = grid(3);
  Bramble b = grid_bramble(3);
  b.order = OrderCertificate{4, OrderMethod::ExactHittingSet};
  CHECK_FALSE(verify_payload(g, "bramble", bramble_to_json(b), cfg));
  b.order = OrderCertificate{5, OrderMethod::ExactHittingSet};
  CHECK(verify_payload(g, "bramble", bramble_to_json(b), cfg));
  b.order = OrderCertificate{5, OrderMethod::Structural};
  CHECK(verify_payload(g, "bramble", bramble_to_json(b), cfg));
  b.order = OrderCertificate{3, OrderMethod::LpFractional};
  CHECK_FALSE(verify_payload(g, "bramble", bramble_to_json(b), cfg));
  Constants tiny = cfg;
  tiny.hitting_set_max_vertices = 2;
  b.order = OrderCertificate{4, OrderMethod::LpFractional};
  CHECK_FALSE(verify_payload(g, "bramble", bramble_to_json(b), tiny));
  b.order = OrderCertificate{5, OrderMethod::LpFractional};
  CHECK(verify_payload(g, "bramble", bramble_to_json(b), tiny));  // the LP value is at most the order 4
}

TEST_CASE("same seed gives byte-identical output") {
  const Constants cfg = Constants::desk();
  Graph g = grid(6);
  FindBrambleResult a = find_bramble(g, cfg, 9);
  FindBrambleResult b = find_bramble(g, cfg, 9);
  CHECK(dump_witness(make_witness(g, "edgelist", "bramble", bramble_to_json(a.bramble), "find-bramble", 9, cfg)) ==
        dump_witness(make_witness(g, "edgelist", "bramble", bramble_to_json(b.bramble), "find-bramble", 9, cfg)));
}
