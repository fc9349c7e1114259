#pragma once

#include <optional>
#include <variant>

#include "bramblekit/constants.hpp"
#include "bramblekit/decomposition.hpp"
#include "bramblekit/graph.hpp"

namespace bk {

/// Partition (A, B, S) of a vertex universe with no A-B edge. Either side may
/// be empty.
struct Separator {
  VertexSet a;
  VertexSet b;
  VertexSet s;

  friend bool operator==(const Separator&, const Separator&) = default;
};

/// Checks that (a, b, s) partitions `universe` and no edge joins a and b.
Check validate_separator(const Graph& g, const VertexSet& universe, const Separator& sep);

/// |S| / (|(A u S) n W| * |(B u S) n W|). Throws InputError when a factor is 0.
Rational sparsity(const Graph& g, const Separator& sep, const VertexSet& w);

/// Smallest-first exhaustive search for |S| <= k with |A n W|, |B n W| <= gamma |W|
/// over all of V(g). Throws CapacityError above cfg.exact_cut_cap vertices.
std::optional<Separator> balanced_separator_exact(const Graph& g, const VertexSet& w, int k,
                                                  const Rational& gamma, const Constants& cfg);

struct SparsityReport {
  Separator sep;
  VertexSet w;
  Rational alpha{0};
  bool exact = false;  // true when the search was exhaustive over g[u]
};

/// Sparsest separator of W in g[u] found by exhaustive search (|u| <= cap) or by
/// the pairwise min-cut sweep otherwise.
SparsityReport sparse_separator_oracle(const Graph& g, const VertexSet& u, const VertexSet& w,
                                       const Constants& cfg);

struct UnsplittableSet {
  VertexSet u;
  VertexSet w;
  int k = 0;
  int s = 0;  // separator budget used at this level
  Rational alpha_lb{0};
  Rational alpha_witness{0};  // sparsity of the separator the oracle returned
  Separator witness;
  bool exact = false;  // alpha_lb is exact rather than heuristic-conditional
};

/// Checks |u| connected, w subset of u, 3s <= |w| <= 4s, and (when exact and
/// |u| within the cap) that no separator of w in u is sparser than alpha_lb.
Check validate_unsplittable(const Graph& g, const UnsplittableSet& x, const Constants& cfg);

using RefineResult = std::variant<Separator, UnsplittableSet>;

/// Separator refinement loop. Requires g[u0] connected, w0 subset of u0,
/// |w0| = 4 * cfg.separator_budget(k).
RefineResult refine_or_unsplittable(const Graph& g, const VertexSet& u0, const VertexSet& w0, int k,
                                    const Constants& cfg);

using DecomposeResult = std::variant<TreeDecomposition, UnsplittableSet>;

/// Recursive balanced-separator decomposition with s = separator_budget(k);
/// width <= 5s on success.
DecomposeResult decompose_or_unsplittable(const Graph& g, int k, const Constants& cfg);

struct DoublingResult {
  std::optional<UnsplittableSet> witness;  // from the last failing level
  int failed_k = 0;                        // 0 when the first level succeeded
  int success_k = 1;
  TreeDecomposition td;
};

/// k = 1, 2, 4, ... until decompose_or_unsplittable succeeds.
DoublingResult doubling_driver(const Graph& g, const Constants& cfg);

}  // namespace bk
