#include "bramblekit/witness.hpp"

#include <fstream>
#include <set>

#include "bramblekit/io.hpp"

namespace bk {

namespace {

Json edges_to_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const auto& e : edges) a.push_back({e.u, e.v});
  return a;
}

std::vector<Edge> edges_from_json(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
    out.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
  }
  return out;
}

Json tree_to_json(const TreeSubgraph& t) { return {{"vertices", t.vertices}, {"edges", edges_to_json(t.edges)}}; }

TreeSubgraph tree_from_json(const Json& j) {
  return {j.at("vertices").get<VertexSet>(), edges_from_json(j.at("edges"))};
}

Json order_to_json(const std::optional<OrderCertificate>& o) {
  if (!o) return nullptr;
  return {{"lower_bound", o->lower_bound}, {"method", to_string(o->method)}};
}

std::optional<OrderCertificate> order_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return OrderCertificate{j.at("lower_bound").get<int>(), parse_order_method(j.at("method").get<std::string>())};
}

Json subdivision_to_json(const SubdivisionModel& m) {
  Json paths = Json::array();
  for (const auto& ep : m.edge_paths) paths.push_back({{"a", ep.a}, {"b", ep.b}, {"path", ep.path}});
  return {{"branch_vertices", m.branch_vertices}, {"edge_paths", paths}};
}

SubdivisionModel subdivision_from_json(const Json& j) {
  SubdivisionModel m;
  m.branch_vertices = j.at("branch_vertices").get<std::vector<Vertex>>();
  for (const auto& ep : j.at("edge_paths")) {
    m.edge_paths.push_back({ep.at("a").get<int>(), ep.at("b").get<int>(), ep.at("path").get<Path>()});
  }
  return m;
}

Json rational(const Rational& r) { return to_string(r); }

Json structure_to_json(const StructureReport& r) {
  return {{"k", r.k},
          {"vertices_per_element", r.vertices_per_element},
          {"private_edges", r.private_edges},
          {"union_size", r.union_size},
          {"exact_order", r.exact_order},
          {"treewidth", r.treewidth},
          {"order", r.order},
          {"treewidth_value", r.treewidth_value ? Json(*r.treewidth_value) : Json(nullptr)},
          {"details", r.details}};
}

Check check_order_claim(const Bramble& b, const Constants& cfg) {
  if (!b.order) return std::nullopt;
  const int claim = b.order->lower_bound;
  std::optional<int> exact;
  try {
    exact = bramble_order_exact(b, cfg).order;
  } catch (const CapacityError&) {
  }
  switch (b.order->method) {
    case OrderMethod::ExactHittingSet:
      if (!exact) return "exact order claim exceeds the hitting-set caps";
      if (*exact != claim) return "claimed exact order " + std::to_string(claim) + " but it is " + std::to_string(*exact);
      return std::nullopt;
    case OrderMethod::LpFractional:
    case OrderMethod::Structural: {
      if (exact) {
        if (*exact < claim) return "claimed order " + std::to_string(claim) + " exceeds the exact order " + std::to_string(*exact);
        return std::nullopt;
      }
      LpBound lp = bramble_order_lp(b, cfg);
      BigRational bound = lp.value;
      if (BigRational(claim - 1) >= bound) return "claimed order is not certified by the LP bound";
      return std::nullopt;
    }
  }
  return "unknown order method";
}

}  // namespace

Json constants_to_json(const Constants& c) {
  return {{"beta0", rational(c.beta0)},
          {"beta1", rational(c.beta1)},
          {"beta2", rational(c.beta2)},
          {"exact_cut_cap", c.exact_cut_cap},
          {"c0", rational(c.c0)},
          {"exact_treewidth_cap", c.exact_treewidth_cap},
          {"hitting_set_max_elements", c.hitting_set_max_elements},
          {"hitting_set_max_vertices", c.hitting_set_max_vertices},
          {"flow_exact_var_cap", c.flow_exact_var_cap},
          {"flow_epsilon", rational(c.flow_epsilon)},
          {"flow_max_phases", c.flow_max_phases},
          {"c_deg", rational(c.c_deg)},
          {"c_conn", rational(c.c_conn)},
          {"top_x_factor", c.top_x_factor},
          {"top_y_factor", c.top_y_factor},
          {"top_z_factor", c.top_z_factor},
          {"c_top", rational(c.c_top)},
          {"c_web", rational(c.c_web)},
          {"c_degeneracy", rational(c.c_degeneracy)},
          {"moser_resample_cap", c.moser_resample_cap},
          {"debug_validate", c.debug_validate}};
}

Constants constants_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("constants must be an object");
  Constants c = Constants::desk();
  for (const auto& [key, value] : j.items()) {
    auto rat = [&](Rational& r) { r = value.is_string() ? parse_rational(value.get<std::string>()) : Rational(value.get<long long>()); };
    try {
      if (key == "beta0") rat(c.beta0);
      else if (key == "beta1") rat(c.beta1);
      else if (key == "beta2") rat(c.beta2);
      else if (key == "exact_cut_cap") c.exact_cut_cap = value.get<int>();
      else if (key == "c0") rat(c.c0);
      else if (key == "exact_treewidth_cap") c.exact_treewidth_cap = value.get<int>();
      else if (key == "hitting_set_max_elements") c.hitting_set_max_elements = value.get<int>();
      else if (key == "hitting_set_max_vertices") c.hitting_set_max_vertices = value.get<int>();
      else if (key == "flow_exact_var_cap") c.flow_exact_var_cap = value.get<int>();
      else if (key == "flow_epsilon") rat(c.flow_epsilon);
      else if (key == "flow_max_phases") c.flow_max_phases = value.get<int>();
      else if (key == "c_deg") rat(c.c_deg);
      else if (key == "c_conn") rat(c.c_conn);
      else if (key == "top_x_factor") c.top_x_factor = value.get<int>();
      else if (key == "top_y_factor") c.top_y_factor = value.get<int>();
      else if (key == "top_z_factor") c.top_z_factor = value.get<int>();
      else if (key == "c_top") rat(c.c_top);
      else if (key == "c_web") rat(c.c_web);
      else if (key == "c_degeneracy") rat(c.c_degeneracy);
      else if (key == "moser_resample_cap") c.moser_resample_cap = value.get<std::int64_t>();
      else if (key == "debug_validate") c.debug_validate = value.get<bool>();
      else throw InputError("unknown constant '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw InputError("constant '" + key + "': " + e.what());
    }
  }
  c.check();
  return c;
}

Constants load_constants_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path);
  try {
    return constants_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw InputError("config " + path + ": " + e.what());
  }
}

Json bramble_to_json(const Bramble& b) { return {{"elements", b.elements}, {"order", order_to_json(b.order)}}; }

Bramble bramble_from_json(const Json& j) {
  return {j.at("elements").get<std::vector<VertexSet>>(), order_from_json(j.at("order"))};
}

Json web_to_json(const KWeb& w) {
  Json links = Json::array();
  for (const auto& l : w.linkages) links.push_back({{"i", l.i}, {"j", l.j}, {"paths", l.paths}});
  return {{"k", w.k},         {"h", w.h},       {"tree", tree_to_json(w.tree)}, {"subtrees", w.subtrees},
          {"flats", w.flats}, {"body", w.body}, {"linkages", links}};
}

KWeb web_from_json(const Json& j) {
  KWeb w;
  w.k = j.at("k").get<int>();
  w.h = j.at("h").get<int>();
  w.tree = tree_from_json(j.at("tree"));
  w.subtrees = j.at("subtrees").get<std::vector<VertexSet>>();
  w.flats = j.at("flats").get<std::vector<VertexSet>>();
  w.body = j.at("body").get<VertexSet>();
  for (const auto& l : j.at("linkages")) {
    w.linkages.push_back({l.at("i").get<int>(), l.at("j").get<int>(), l.at("paths").get<std::vector<Path>>()});
  }
  return w;
}

Json gridlike_to_json(const GridLikeMinor& glm) {
  return {{"order", glm.order},
          {"left", glm.ig.left},
          {"right", glm.ig.right},
          {"intersection_edges", edges_to_json(glm.ig.base.edges())},
          {"topological", glm.topological()},
          {"model", glm.model ? Json{{"branch_sets", glm.model->branch_sets}} : Json(nullptr)},
          {"subdivision", glm.subdivision ? subdivision_to_json(*glm.subdivision) : Json(nullptr)}};
}

GridLikeMinor gridlike_from_json(const Json& j) {
  GridLikeMinor glm;
  glm.order = j.at("order").get<int>();
  auto left = j.at("left").get<std::vector<Path>>();
  auto right = j.at("right").get<std::vector<Path>>();
  std::vector<Edge> edges = edges_from_json(j.at("intersection_edges"));
  glm.ig.left = std::move(left);
  glm.ig.right = std::move(right);
  const int n = static_cast<int>(glm.ig.left.size() + glm.ig.right.size());
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) throw InputError("intersection edge out of range");
  }
  glm.ig.base = Graph(n, std::move(edges));
  if (!j.at("model").is_null()) glm.model = MinorModel{j.at("model").at("branch_sets").get<std::vector<VertexSet>>()};
  if (!j.at("subdivision").is_null()) glm.subdivision = subdivision_from_json(j.at("subdivision"));
  if (j.at("topological").get<bool>() != glm.topological()) throw InputError("topological flag disagrees with the model");
  return glm;
}

Json perfect_to_json(const PerfectBramble& pb, const Constants& cfg) {
  Json edges = Json::array();
  for (const auto& es : pb.edges) edges.push_back(edges_to_json(es));
  HostUnion h = host_union(pb);
  return {{"elements", pb.elements},
          {"edges", edges},
          {"order", order_to_json(pb.order)},
          {"host_union", {{"vertices", h.vertices}, {"edges", edges_to_json(h.edges)}}},
          {"structure", structure_to_json(check_perfect_structure(pb, cfg))}};
}

PerfectBramble perfect_from_json(const Json& j) {
  PerfectBramble pb;
  pb.elements = j.at("elements").get<std::vector<VertexSet>>();
  for (const auto& es : j.at("edges")) pb.edges.push_back(edges_from_json(es));
  pb.order = order_from_json(j.at("order"));
  return pb;
}

Json decomposition_to_json(const TreeDecomposition& td, bool exact) {
  return {{"bags", td.bags}, {"tree_edges", edges_to_json(td.tree.edges())}, {"width", td.width}, {"exact", exact}};
}

TreeDecomposition decomposition_from_json(const Json& j) {
  auto bags = j.at("bags").get<std::vector<VertexSet>>();
  auto edges = edges_from_json(j.at("tree_edges"));
  const int n = static_cast<int>(bags.size());
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) throw InputError("tree edge out of range");
  }
  TreeDecomposition td = make_decomposition(std::move(bags), std::move(edges));
  td.width = j.at("width").get<int>();
  return td;
}

Json unsplittable_to_json(const UnsplittableSet& x) {
  return {{"u", x.u},
          {"w", x.w},
          {"k", x.k},
          {"s", x.s},
          {"alpha_lb", rational(x.alpha_lb)},
          {"alpha_witness", rational(x.alpha_witness)},
          {"witness", {{"a", x.witness.a}, {"b", x.witness.b}, {"s", x.witness.s}}},
          {"exact", x.exact}};
}

UnsplittableSet unsplittable_from_json(const Json& j) {
  UnsplittableSet x;
  x.u = j.at("u").get<VertexSet>();
  x.w = j.at("w").get<VertexSet>();
  x.k = j.at("k").get<int>();
  x.s = j.at("s").get<int>();
  x.alpha_lb = parse_rational(j.at("alpha_lb").get<std::string>());
  x.alpha_witness = parse_rational(j.at("alpha_witness").get<std::string>());
  const Json& w = j.at("witness");
  x.witness = {w.at("a").get<VertexSet>(), w.at("b").get<VertexSet>(), w.at("s").get<VertexSet>()};
  x.exact = j.at("exact").get<bool>();
  return x;
}

Json dichotomy_to_json(const DichotomyResult& r, const std::string& parameter, const Constants& cfg) {
  return {{"parameter", parameter},
          {"k", r.k},
          {"verdict", r.verdict},
          {"branch", r.branch},
          {"value", r.value ? Json(*r.value) : Json(nullptr)},
          {"bound", r.bound},
          {"bramble_order", r.bramble_order},
          {"solution", {{"value", r.solution.value}, {"witness", r.solution.witness}}},
          {"bramble", r.bramble ? perfect_to_json(*r.bramble, cfg) : Json(nullptr)},
          {"decomposition", r.decomposition ? decomposition_to_json(*r.decomposition, false) : Json(nullptr)},
          {"note", r.note}};
}

DichotomyResult dichotomy_from_json(const Json& j) {
  DichotomyResult r;
  r.k = j.at("k").get<int>();
  r.verdict = j.at("verdict").get<std::string>();
  r.branch = j.at("branch").get<std::string>();
  if (!j.at("value").is_null()) r.value = j.at("value").get<int>();
  r.bound = j.at("bound").get<int>();
  r.bramble_order = j.at("bramble_order").get<int>();
  r.solution.value = j.at("solution").at("value").get<int>();
  r.solution.witness = j.at("solution").at("witness").get<std::vector<Vertex>>();
  if (!j.at("bramble").is_null()) r.bramble = perfect_from_json(j.at("bramble"));
  if (!j.at("decomposition").is_null()) r.decomposition = decomposition_from_json(j.at("decomposition"));
  r.note = j.at("note").get<std::string>();
  return r;
}

Check verify_payload(const Graph& g, const std::string& kind, const Json& payload, const Constants& cfg) {
  try {
    if (kind == "bramble") {
      Bramble b = bramble_from_json(payload);
      if (auto bad = validate_bramble(g, b)) return bad;
      return check_order_claim(b, cfg);
    }
    if (kind == "kweb") return validate_web(g, web_from_json(payload));
    if (kind == "gridlike") {
      GridLikeMinor glm = gridlike_from_json(payload);
      if (auto bad = validate_gridlike(g, glm)) return bad;
      if (glm.ig.base.edges() != intersection_graph(glm.ig.left, glm.ig.right).base.edges()) {
        return "intersection edges differ";
      }
      return std::nullopt;
    }
    if (kind == "perfect-bramble") {
      PerfectBramble pb = perfect_from_json(payload);
      if (auto bad = validate_perfect(g, pb)) return bad;
      const int half = static_cast<int>((pb.elements.size() + 1) / 2);
      if (!pb.order || pb.order->lower_bound != half) return "perfect bramble order must be ceil(k/2)";
      HostUnion h = host_union(pb);
      const Json& hj = payload.at("host_union");
      if (hj.at("vertices").get<VertexSet>() != h.vertices || edges_from_json(hj.at("edges")) != h.edges) {
        return "host union differs from the elements";
      }
      if (payload.at("structure") != structure_to_json(check_perfect_structure(pb, cfg))) return "structure report differs";
      return std::nullopt;
    }
    if (kind == "tree-decomposition") {
      TreeDecomposition td = decomposition_from_json(payload);
      if (auto bad = validate_decomposition(g, td)) return bad;
      if (payload.at("exact").get<bool>()) {
        if (g.n() > cfg.exact_treewidth_cap) return "exactness claim exceeds the treewidth cap";
        if (exact_treewidth(g, cfg.exact_treewidth_cap).width != td.width) return "width is not the treewidth";
      }
      return std::nullopt;
    }
    if (kind == "unsplittable-set") return validate_unsplittable(g, unsplittable_from_json(payload), cfg);
    if (kind == "dichotomy") {
      ParameterPlugin plugin = plugin_by_name(payload.at("parameter").get<std::string>());
      DichotomyResult r = dichotomy_from_json(payload);
      if (auto bad = validate_dichotomy(g, plugin, r)) return bad;
      if (r.bramble && payload.at("bramble") != perfect_to_json(*r.bramble, cfg)) return "bramble payload inconsistent";
      return std::nullopt;
    }
    return "unknown witness kind '" + kind + "'";
  } catch (const nlohmann::json::exception& e) {
    return std::string("malformed payload: ") + e.what();
  } catch (const InputError& e) {
    return std::string("malformed payload: ") + e.what();
  } catch (const CapacityError& e) {
    return std::string("cannot re-check: ") + e.what();
  }
}

Json make_witness(const Graph& g, const std::string& format, const std::string& kind, Json payload,
                  const std::string& algorithm, std::uint64_t seed, const Constants& cfg) {
  Check status = verify_payload(g, kind, payload, cfg);
  Json doc;
  doc["graph_ref"] = {{"hash", graph_hash(g)}, {"format", format}, {"n", g.n()}, {"m", g.m()}};
  doc["kind"] = kind;
  doc["payload"] = std::move(payload);
  doc["provenance"] = {{"algorithm", algorithm},
                       {"seed", seed},
                       {"constants", constants_to_json(cfg)},
                       {"validation", status ? "violation: " + *status : "ok"}};
  return doc;
}

Check verify_witness(const Graph& g, const Json& doc) {
  try {
    static const std::set<std::string> keys{"graph_ref", "kind", "payload", "provenance"};
    for (const auto& [key, value] : doc.items()) {
      if (!keys.count(key)) return "unexpected key '" + key + "'";
    }
    const Json& ref = doc.at("graph_ref");
    if (ref.at("hash").get<std::string>() != graph_hash(g)) return "graph hash differs";
    if (ref.at("n").get<int>() != g.n() || ref.at("m").get<std::size_t>() != g.m()) return "graph size differs";
    parse_format(ref.at("format").get<std::string>());
    const Json& prov = doc.at("provenance");
    if (prov.at("algorithm").get<std::string>().empty()) return "provenance lacks the algorithm";
    prov.at("seed").get<std::uint64_t>();
    Constants cfg = constants_from_json(prov.at("constants"));
    if (prov.at("validation").get<std::string>() != "ok") return "witness was emitted with a failed validation";
    return verify_payload(g, doc.at("kind").get<std::string>(), doc.at("payload"), cfg);
  } catch (const nlohmann::json::exception& e) {
    return std::string("malformed witness: ") + e.what();
  } catch (const InputError& e) {
    return std::string("malformed witness: ") + e.what();
  }
}

std::string dump_witness(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace bk
