#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bramblekit/bramble.hpp"
#include "bramblekit/decomposition.hpp"
#include "bramblekit/fpt.hpp"
#include "bramblekit/generators.hpp"
#include "bramblekit/gridlike.hpp"
#include "bramblekit/io.hpp"
#include "bramblekit/perfect.hpp"
#include "bramblekit/web.hpp"
#include "bramblekit/witness.hpp"

using namespace bk;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kBadInput = 2;

struct Options {
  std::uint64_t seed = 0;
  std::string config;
  std::string format = "edgelist";
  std::string out;
  bool debug_validate = false;
};

Constants load_config(const Options& o) {
  Constants c = o.config.empty() ? Constants::desk() : load_constants_file(o.config);
  if (o.debug_validate) c.debug_validate = true;
  return c;
}

Graph load_graph(const std::string& path, const Options& o) {
  GraphFormat f = parse_format(o.format);
  if (path == "-") return read_graph(std::cin, f);
  return read_graph_file(path, f);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  f << text;
}

// Summary goes to stderr when the witness itself is written to stdout.
std::ostream& report(const Options& o) { return o.out.empty() ? std::cerr : std::cout; }

int emit_witness(const Options& o, const Graph& g, const std::string& kind, Json payload, const std::string& algorithm,
                 const Constants& cfg) {
  Json doc = make_witness(g, o.format, kind, std::move(payload), algorithm, o.seed, cfg);
  emit(o, dump_witness(doc));
  const std::string status = doc["provenance"]["validation"].get<std::string>();
  report(o) << "validation: " << status << "\n";
  return status == "ok" ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brambles, webs, grid-like minors and perfect brambles"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print help");
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--config", o.config, "JSON file of constants (desk defaults otherwise)");
    sub->add_option("--format", o.format, "Graph format: dimacs or edgelist")->check(CLI::IsMember({"dimacs", "edgelist"}));
    sub->add_option("--out", o.out, "Output file (stdout otherwise)");
    sub->add_flag("--debug-validate", o.debug_validate, "Check internal invariants while running");
  };

  std::string gen_kind;
  std::vector<long long> gen_params;
  auto* gen = app.add_subcommand("generate", "Write a generated graph");
  gen->add_option("kind", gen_kind, "grid, complete, path or random")->required();
  gen->add_option("params", gen_params, "Generator parameters")->required();
  add_common(gen);

  std::string graph_path = "-";
  std::string tw_mode;
  auto* tw = app.add_subcommand("treewidth", "Exact or approximate tree decomposition");
  tw->add_option("mode", tw_mode, "exact or approx")->required()->check(CLI::IsMember({"exact", "approx"}));
  tw->add_option("graph", graph_path, "Graph file, - for stdin");
  add_common(tw);

  std::string br_mode;
  int br_h = 2;
  auto* br = app.add_subcommand("bramble", "FIND-BRAMBLE or a bramble from a web");
  br->add_option("mode", br_mode, "find-bramble or from-web")->required()->check(CLI::IsMember({"find-bramble", "from-web"}));
  br->add_option("graph", graph_path, "Graph file, - for stdin");
  br->add_option("--h", br_h, "Web order for from-web");
  add_common(br);

  int web_k = 2;
  int web_h = 2;
  auto* web = app.add_subcommand("web", "k-web of order h or a tree decomposition");
  web->add_option("graph", graph_path, "Graph file, - for stdin");
  web->add_option("--k", web_k, "Linkage width");
  web->add_option("--h", web_h, "Order");
  add_common(web);

  int grid_p = 2;
  auto* gl = app.add_subcommand("gridlike", "Topological grid-like minor of order p");
  gl->add_option("graph", graph_path, "Graph file, - for stdin");
  gl->add_option("--p", grid_p, "Target order");
  add_common(gl);

  int perfect_order = 1;
  auto* pf = app.add_subcommand("perfect", "Perfect bramble and its bounded-degree union");
  pf->add_option("graph", graph_path, "Graph file, - for stdin");
  pf->add_option("--order", perfect_order, "Target order");
  add_common(pf);

  std::string witness_path;
  auto* vf = app.add_subcommand("verify", "Re-validate a witness file");
  vf->add_option("witness", witness_path, "Witness file")->required();
  vf->add_option("--graph", graph_path, "Graph the witness refers to")->required();
  add_common(vf);

  std::string parameter = "vc";
  int fpt_k = 0;
  auto* fs = app.add_subcommand("fpt-solve", "Decide pi(G) <= k with a witness");
  fs->add_option("graph", graph_path, "Graph file, - for stdin");
  fs->add_option("--parameter", parameter, "vc or longest-path")->check(CLI::IsMember({"vc", "longest-path"}));
  fs->add_option("--k", fpt_k, "Threshold")->required();
  add_common(fs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  try {
    const Constants cfg = load_config(o);
    if (gen->parsed()) {
      Graph g = generate(gen_kind, gen_params, o.seed);
      std::ostringstream s;
      write_graph(s, g, parse_format(o.format));
      emit(o, s.str());
      return kOk;
    }
    if (vf->parsed()) {
      Graph g = load_graph(graph_path, o);
      std::ifstream in(witness_path);
      if (!in) throw InputError("cannot open " + witness_path);
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("witness is not JSON: ") + e.what());
      }
      if (auto bad = verify_witness(g, doc)) {
        std::cout << "violation: " << *bad << "\n";
        return kViolation;
      }
      std::cout << "ok\n";
      return kOk;
    }
    Graph g = load_graph(graph_path, o);
    if (tw->parsed()) {
      if (tw_mode == "exact") {
        ExactTreewidth ex = exact_treewidth(g, cfg.exact_treewidth_cap);
        report(o) << "treewidth " << ex.width << "\n";
        return emit_witness(o, g, "tree-decomposition", decomposition_to_json(ex.td, true), "exact-treewidth", cfg);
      }
      ApproxTreewidth ap = approximate_treewidth(g, cfg);
      report(o) << "width " << ap.bracket.k1 << ", conditional lower bound " << ap.bracket.k2 << "\n";
      return emit_witness(o, g, "tree-decomposition", decomposition_to_json(ap.td, false), "approximate-treewidth", cfg);
    }
    if (br->parsed()) {
      if (br_mode == "find-bramble") {
        FindBrambleResult r = find_bramble(g, cfg, o.seed);
        report(o) << r.bramble.elements.size() << " elements, level k = " << r.k
                  << (r.degenerate ? ", degenerate: " + r.note : "") << "\n";
        return emit_witness(o, g, "bramble", bramble_to_json(r.bramble), "find-bramble", cfg);
      }
      const int k = br_h * br_h;
      WebOrDecomposition wd = build_web_or_decomposition(g, k, br_h, cfg);
      if (auto* td = std::get_if<TreeDecomposition>(&wd)) {
        report(o) << "no web of order " << br_h << "; decomposition of width " << td->width << "\n";
        return emit_witness(o, g, "tree-decomposition", decomposition_to_json(*td, false), "web-or-decomposition", cfg);
      }
      Bramble b = bramble_from_web(g, std::get<KWeb>(wd));
      report(o) << b.elements.size() << " elements of order at least " << b.order->lower_bound << "\n";
      return emit_witness(o, g, "bramble", bramble_to_json(b), "bramble-from-web", cfg);
    }
    if (web->parsed()) {
      WebOrDecomposition wd = build_web_or_decomposition(g, web_k, web_h, cfg);
      if (auto* td = std::get_if<TreeDecomposition>(&wd)) {
        report(o) << "decomposition of width " << td->width << "\n";
        return emit_witness(o, g, "tree-decomposition", decomposition_to_json(*td, false), "web-or-decomposition", cfg);
      }
      report(o) << "web of order " << web_h << " with width " << web_k << "\n";
      return emit_witness(o, g, "kweb", web_to_json(std::get<KWeb>(wd)), "web-or-decomposition", cfg);
    }
    if (gl->parsed()) {
      PipelineResult r = gridlike_pipeline(g, grid_p, cfg, o.seed);
      for (const auto& line : r.log) report(o) << line << "\n";
      if (r.gridlike) return emit_witness(o, g, "gridlike", gridlike_to_json(*r.gridlike), "gridlike-pipeline", cfg);
      if (r.counter_witness) {
        return emit_witness(o, g, "tree-decomposition", decomposition_to_json(*r.counter_witness, false),
                            "gridlike-pipeline", cfg);
      }
      report(o) << "failure at " << r.stage << ": " << r.message << "\n";
      return kViolation;
    }
    if (pf->parsed()) {
      BoundedDegreeResult r = bounded_degree_subgraph(g, perfect_order, cfg, o.seed);
      if (r.bramble) {
        report(o) << "perfect bramble of order " << r.order << " via " << r.route << ", union has "
                  << r.host.vertices.size() << " vertices\n";
        return emit_witness(o, g, "perfect-bramble", perfect_to_json(*r.bramble, cfg), "bounded-degree-subgraph", cfg);
      }
      report(o) << "failure at " << r.pipeline.stage << ": " << r.pipeline.message << "\n";
      if (r.pipeline.counter_witness) {
        return emit_witness(o, g, "tree-decomposition", decomposition_to_json(*r.pipeline.counter_witness, false),
                            "bounded-degree-subgraph", cfg);
      }
      return kViolation;
    }
    if (fs->parsed()) {
      ParameterPlugin plugin = plugin_by_name(parameter);
      DichotomyResult r = decide(g, plugin, fpt_k, cfg, o.seed);
      report(o) << parameter << (r.verdict == "greater" ? " > " : " <= ") << fpt_k << " via " << r.branch;
      if (r.value) report(o) << " (value " << *r.value << ")";
      report(o) << "\n";
      return emit_witness(o, g, "dichotomy", dichotomy_to_json(r, parameter, cfg), "decide", cfg);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
