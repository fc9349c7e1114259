#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace bk {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);
/// Parses "p", "p/q" or a decimal such as "0.25".
Rational parse_rational(const std::string& text);

/// Every constant the algorithms leave symbolic, in one auditable record.
///
/// `proof()` holds the smallest values satisfying the inequalities the
/// correctness arguments rely on; those make every desk-sized instance
/// vacuous (e.g. 4*beta1*k terminals exceed the vertex count), so `desk()`
/// scales them down while keeping the same inequalities.
struct Constants {
  // separator refinement / doubling driver
  Rational beta0{1};
  Rational beta1{18};
  Rational beta2{792};
  int exact_cut_cap = 14;

  // approximate-treewidth bracket: k2 = floor(k1 / (c0 sqrt(log2 k1)))
  Rational c0{1};

  // exhaustive caps
  int exact_treewidth_cap = 18;
  int hitting_set_max_elements = 64;
  int hitting_set_max_vertices = 30;

  // concurrent flow: exact rational LP up to this many variables, otherwise
  // the multiplicative-weights approximation stopped at a (1 + flow_epsilon) gap
  int flow_exact_var_cap = 400;
  Rational flow_epsilon{1, 10};
  int flow_max_phases = 3000;

  // TOP-MINOR
  Rational c_deg{256};  // density precondition e(G) >= c_deg p^2 n
  Rational c_conn{128};  // Mader connectivity target c_conn p^2
  int top_x_factor = 3;  // |X| = top_x_factor * p
  int top_y_factor = 5;  // |Y_i| = top_y_factor * p
  int top_z_factor = 7;  // |Z| = top_z_factor * p^2

  // grid-like pipeline
  Rational c_top{1};  // intersection-graph average degree threshold c_top p^2
  Rational c_web{1};  // web linkage width k >= c_web h^2 p^2
  Rational c_degeneracy{1};  // d = c_degeneracy p^2

  // Moser resampling
  std::int64_t moser_resample_cap = 10'000'000;

  bool debug_validate = false;

  static Constants proof();
  static Constants desk();

  /// Throws InputError when a structural inequality is violated
  /// (beta1 >= 18 beta0, beta2 >= 44 beta0 beta1, positivity, caps).
  void check() const;

  /// s = ceil(beta1 * k), at least 1.
  int separator_budget(int k) const;

  friend bool operator==(const Constants&, const Constants&) = default;
};

}  // namespace bk
