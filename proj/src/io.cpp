#include "bramblekit/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bk {

GraphFormat parse_format(const std::string& name) {
  if (name == "dimacs") return GraphFormat::Dimacs;
  if (name == "edgelist") return GraphFormat::EdgeList;
  throw InputError("unknown graph format: " + name);
}

std::string format_name(GraphFormat f) {
  return f == GraphFormat::Dimacs ? "dimacs" : "edgelist";
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  long long n = -1;
  long long declared_m = -1;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (!(ls >> kind >> n >> declared_m) || (kind != "edge" && kind != "col") || n < 0) {
        throw InputError("dimacs line " + std::to_string(lineno) + ": bad problem line");
      }
    } else if (tag == "e") {
      long long u = 0;
      long long v = 0;
      if (n < 0) throw InputError("dimacs: edge before problem line");
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n) {
        throw InputError("dimacs line " + std::to_string(lineno) + ": bad edge");
      }
      if (u == v) throw InputError("dimacs line " + std::to_string(lineno) + ": self-loop");
      pairs.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw InputError("dimacs line " + std::to_string(lineno) + ": unknown tag " + tag);
    }
  }
  if (n < 0) throw InputError("dimacs: missing problem line");
  return Graph::from_pairs(static_cast<int>(n), pairs);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Graph read_edgelist(std::istream& in) {
  std::string line;
  long long n = -1;
  long long max_id = -1;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#' || first[0] == '%') {
      std::string key;
      long long count = 0;
      if (first == "#" && (ls >> key >> count) && key == "n") n = count;
      continue;
    }
    long long u = 0;
    long long v = 0;
    std::istringstream ps(line);
    if (!(ps >> u >> v) || u < 0 || v < 0 || u > 10'000'000 || v > 10'000'000) {
      throw InputError("edgelist line " + std::to_string(lineno) + ": bad pair");
    }
    if (u == v) throw InputError("edgelist line " + std::to_string(lineno) + ": self-loop");
    max_id = std::max({max_id, u, v});
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) n = max_id + 1;
  if (max_id >= n) throw InputError("edgelist: vertex id exceeds declared count");
  return Graph::from_pairs(static_cast<int>(n), pairs);
}

void write_edgelist(std::ostream& out, const Graph& g) {
  out << "# n " << g.n() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& in, GraphFormat f) {
  return f == GraphFormat::Dimacs ? read_dimacs(in) : read_edgelist(in);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat f) {
  if (f == GraphFormat::Dimacs) write_dimacs(out, g);
  else write_edgelist(out, g);
}

Graph read_graph_file(const std::string& path, GraphFormat f) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path);
  return read_graph(in, f);
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.n()));
  for (const auto& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace bk
