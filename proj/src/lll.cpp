#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "bramblekit/gridlike.hpp"

namespace bk {

namespace {

// class index and position per vertex of h, -1 outside every class
std::pair<std::vector<int>, std::vector<int>> class_index(const Graph& h, const std::vector<VertexSet>& classes) {
  std::vector<int> cls(h.n(), -1);
  std::vector<int> pos(h.n(), -1);
  for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
    for (int j = 0; j < static_cast<int>(classes[i].size()); ++j) {
      Vertex v = classes[i][j];
      if (!h.valid(v)) throw InputError("transversal: class vertex out of range");
      if (cls[v] != -1) throw InputError("transversal: classes overlap at vertex " + std::to_string(v));
      cls[v] = i;
      pos[v] = j;
    }
  }
  return {cls, pos};
}

std::vector<std::vector<int>> clauses_by_var(const CnfInstance& f) {
  std::vector<std::vector<int>> occ(f.num_vars);
  for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c) {
    for (int lit : f.clauses[c]) {
      int var = std::abs(lit) - 1;
      if (occ[var].empty() || occ[var].back() != c) occ[var].push_back(c);
    }
  }
  return occ;
}

}  // namespace

CnfInstance encode_transversal_cnf(const Graph& h, const std::vector<VertexSet>& classes) {
  if (classes.empty()) throw InputError("encode_transversal_cnf: no classes");
  std::size_t smallest = classes[0].size();
  for (const auto& c : classes) smallest = std::min(smallest, c.size());
  if (smallest == 0) throw InputError("encode_transversal_cnf: empty class");
  CnfInstance f;
  f.t = std::bit_width(smallest) - 1;
  const int r = static_cast<int>(classes.size());
  f.num_vars = r * f.t;
  const std::size_t n = std::size_t{1} << f.t;
  for (const auto& c : classes) f.kept.emplace_back(c.begin(), c.begin() + n);
  auto [cls, pos] = class_index(h, f.kept);
  for (const Edge& e : h.edges()) {
    Vertex u = e.u;
    Vertex v = e.v;
    if (cls[u] < 0 || cls[v] < 0 || cls[u] == cls[v]) continue;
    if (cls[u] > cls[v]) std::swap(u, v);
    std::vector<int> clause;
    for (Vertex x : {u, v}) {
      for (int b = 0; b < f.t; ++b) {
        int var = cls[x] * f.t + b;
        clause.push_back(((pos[x] >> b) & 1) ? -(var + 1) : var + 1);
      }
    }
    f.clauses.push_back(std::move(clause));
    f.edge_origin.push_back(e);
  }
  return f;
}

bool evaluate_clause(const std::vector<int>& clause, const std::vector<char>& assignment) {
  for (int lit : clause) {
    bool value = assignment[std::abs(lit) - 1] != 0;
    if ((lit > 0) == value) return true;
  }
  return false;
}

bool evaluate_cnf(const CnfInstance& f, const std::vector<char>& assignment) {
  if (static_cast<int>(assignment.size()) != f.num_vars) return false;
  for (const auto& c : f.clauses) {
    if (!evaluate_clause(c, assignment)) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<int>> clause_neighbors(const CnfInstance& f) {
  auto occ = clauses_by_var(f);
  std::vector<std::vector<int>> nb(f.clauses.size());
  for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c) {
    std::set<int> s;
    for (int lit : f.clauses[c]) {
      for (int d : occ[std::abs(lit) - 1]) {
        if (d != c) s.insert(d);
      }
    }
    nb[c].assign(s.begin(), s.end());
  }
  return nb;
}

}  // namespace

int max_clause_neighbors(const CnfInstance& f) {
  int best = 0;
  for (const auto& nb : clause_neighbors(f)) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

MoserResult moser_resample(const CnfInstance& f, std::uint64_t seed, long long iteration_cap) {
  MoserResult out;
  const auto nb = clause_neighbors(f);
  out.bound_holds = true;
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    out.max_neighbors = std::max(out.max_neighbors, static_cast<int>(nb[c].size()));
    const int w = static_cast<int>(f.clauses[c].size());
    if (w < 5 || (w < 62 && static_cast<long long>(nb[c].size()) > (1LL << (w - 5)) - 1)) out.bound_holds = false;
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  out.assignment.resize(f.num_vars);
  for (auto& b : out.assignment) b = coin(rng);
  for (const auto& c : f.clauses) {
    if (c.empty()) {
      out.report = "formula contains an empty clause";
      return out;
    }
  }
  auto resample = [&](int c) {
    for (int lit : f.clauses[c]) out.assignment[std::abs(lit) - 1] = coin(rng);
    ++out.resamples;
  };
  // lowest violated clause among c and its neighbours, -1 when none
  auto violated_near = [&](int c) {
    int best = -1;
    if (!evaluate_clause(f.clauses[c], out.assignment)) best = c;
    for (int d : nb[c]) {
      if (best != -1 && d > best) break;
      if (!evaluate_clause(f.clauses[d], out.assignment)) {
        best = best == -1 ? d : std::min(best, d);
        break;
      }
    }
    return best;
  };
  std::vector<int> stack;
  for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c) {
    if (evaluate_clause(f.clauses[c], out.assignment)) continue;
    resample(c);
    stack.push_back(c);
    while (!stack.empty()) {
      if (out.resamples > iteration_cap) {
        out.report = "resample cap " + std::to_string(iteration_cap) + " exceeded";
        return out;
      }
      int d = violated_near(stack.back());
      if (d == -1) {
        stack.pop_back();
      } else {
        resample(d);
        stack.push_back(d);
      }
    }
    --c;  // earlier clauses stay satisfied; recheck this one
  }
  out.satisfied = evaluate_cnf(f, out.assignment);
  out.report = out.satisfied ? "satisfied" : "assignment failed evaluation";
  return out;
}

std::vector<Vertex> decode_transversal(const CnfInstance& f, const std::vector<char>& assignment) {
  std::vector<Vertex> picks;
  for (int i = 0; i < static_cast<int>(f.kept.size()); ++i) {
    std::size_t index = 0;
    for (int b = 0; b < f.t; ++b) index |= static_cast<std::size_t>(assignment[i * f.t + b] != 0) << b;
    picks.push_back(index < f.kept[i].size() ? f.kept[i][index] : -1);
  }
  return picks;
}

Check check_transversal(const Graph& h, const std::vector<VertexSet>& classes, const std::vector<Vertex>& picks) {
  if (picks.size() != classes.size()) return "expected one pick per class";
  for (std::size_t i = 0; i < picks.size(); ++i) {
    if (!contains(make_set(classes[i]), picks[i])) return "pick " + std::to_string(i) + " is not in its class";
    for (std::size_t j = 0; j < i; ++j) {
      if (picks[i] == picks[j] || h.adjacent(picks[i], picks[j])) {
        return "picks " + std::to_string(j) + " and " + std::to_string(i) + " are adjacent";
      }
    }
  }
  return std::nullopt;
}

namespace {

// Repeatedly take a minimum-degree vertex of the remaining classes, then drop
// its class and its neighbours.
std::optional<std::vector<Vertex>> greedy_transversal(const Graph& h, const std::vector<VertexSet>& classes) {
  auto [cls, pos] = class_index(h, classes);
  const int r = static_cast<int>(classes.size());
  std::vector<char> alive(h.n(), 0);
  for (Vertex v = 0; v < h.n(); ++v) alive[v] = cls[v] >= 0;
  std::vector<Vertex> picks(r, -1);
  std::vector<int> left(r);
  for (int i = 0; i < r; ++i) left[i] = static_cast<int>(classes[i].size());
  for (int round = 0; round < r; ++round) {
    Vertex best = -1;
    int best_deg = 0;
    for (Vertex v = 0; v < h.n(); ++v) {
      if (!alive[v]) continue;
      int deg = 0;
      for (Vertex w : h.neighbors(v)) deg += alive[w] && cls[w] != cls[v];
      if (best == -1 || deg < best_deg) {
        best = v;
        best_deg = deg;
      }
    }
    if (best == -1) return std::nullopt;
    picks[cls[best]] = best;
    for (Vertex w : classes[cls[best]]) alive[w] = 0;
    for (Vertex w : h.neighbors(best)) {
      if (alive[w]) {
        alive[w] = 0;
        if (--left[cls[w]] == 0) return std::nullopt;
      }
    }
  }
  return picks;
}

}  // namespace

TransversalResult lll_transversal(const Graph& h, const std::vector<VertexSet>& classes, int d, std::uint64_t seed,
                                  const Constants& cfg) {
  if (classes.empty()) throw InputError("lll_transversal: no classes");
  class_index(h, classes);
  TransversalResult out;
  const long long r = static_cast<long long>(classes.size());
  long long smallest = static_cast<long long>(classes[0].size());
  for (const auto& c : classes) smallest = std::min(smallest, static_cast<long long>(c.size()));
  if (smallest == 0) {
    out.method = "none";
    out.report = "empty class";
    return out;
  }
  out.lll_condition = r >= 2 && smallest >= 64 * (2 * r - 3) * static_cast<long long>(d);
  out.greedy_condition = smallest >= r * (r - 1) * static_cast<long long>(d) + 1;

  auto try_lll = [&]() {
    CnfInstance f = encode_transversal_cnf(h, classes);
    MoserResult m = moser_resample(f, seed, cfg.moser_resample_cap);
    out.resamples += m.resamples;
    if (!m.satisfied) {
      out.report += "moser: " + m.report + "; ";
      return false;
    }
    auto picks = decode_transversal(f, m.assignment);
    if (check_transversal(h, classes, picks)) return false;
    out.picks = std::move(picks);
    out.method = "lll";
    return true;
  };
  auto try_greedy = [&]() {
    auto picks = greedy_transversal(h, classes);
    if (!picks || check_transversal(h, classes, *picks)) {
      out.report += "greedy: a class ran out; ";
      return false;
    }
    out.picks = std::move(picks);
    out.method = "greedy";
    return true;
  };
  bool ok = false;
  if (out.lll_condition) {
    ok = try_lll();
  } else if (out.greedy_condition) {
    ok = try_greedy();
  } else {
    out.report = "size conditions fail, best effort; ";
    ok = try_greedy() || try_lll();
  }
  if (!ok) {
    out.method = "none";
    out.report += "no transversal found";
  } else {
    out.report += "found by " + out.method;
  }
  return out;
}

}  // namespace bk
