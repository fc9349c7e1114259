#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bk {

using BigRational = boost::multiprecision::cpp_rational;

enum class Relation { Le, Ge, Eq };
enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

/// maximize c.x subject to rows (a_i . x rel_i b_i) and x >= 0.
template <class T>
struct LinearProgram {
  struct Row {
    std::vector<std::pair<int, T>> coeffs;  // sparse (variable, coefficient)
    Relation rel = Relation::Le;
    T rhs{};
  };
  int num_vars = 0;
  std::vector<T> objective;
  std::vector<Row> rows;

  explicit LinearProgram(int vars = 0) : num_vars(vars), objective(vars) {}
  void add_row(std::vector<std::pair<int, T>> coeffs, Relation rel, T rhs) {
    rows.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

template <class T>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  T value{};
  std::vector<T> x;
};

/// Dense two-phase simplex. Exact types use Bland's rule throughout; double
/// uses Dantzig pricing with a Bland fallback on stalls.
template <class T>
LpResult<T> solve_lp(const LinearProgram<T>& lp, long long iteration_limit = 1'000'000);

extern template LpResult<double> solve_lp(const LinearProgram<double>&, long long);
extern template LpResult<BigRational> solve_lp(const LinearProgram<BigRational>&, long long);

}  // namespace bk
