#include "bramblekit/lp.hpp"

#include <cmath>
#include <type_traits>

namespace bk {

namespace {

template <class T>
struct Num {
  static bool zero(const T& x) { return x == 0; }
  static bool pos(const T& x) { return x > 0; }
  static bool neg(const T& x) { return x < 0; }
  static constexpr bool exact = true;
};

template <>
struct Num<double> {
  static constexpr double eps = 1e-9;
  static bool zero(double x) { return std::fabs(x) <= eps; }
  static bool pos(double x) { return x > eps; }
  static bool neg(double x) { return x < -eps; }
  static constexpr bool exact = false;
};

template <class T>
class Tableau {
 public:
  Tableau(int rows, int cols) : m_(rows), n_(cols), a_(static_cast<std::size_t>(rows + 1) * (cols + 1)) {}

  T& at(int r, int c) { return a_[static_cast<std::size_t>(r) * (n_ + 1) + c]; }
  T& rhs(int r) { return at(r, n_); }
  T& obj(int c) { return at(m_, c); }

  void pivot(int pr, int pc) {
    T inv = T(1) / at(pr, pc);
    for (int c = 0; c <= n_; ++c) {
      if (!Num<T>::zero(at(pr, c))) at(pr, c) *= inv;
    }
    at(pr, pc) = T(1);
    for (int r = 0; r <= m_; ++r) {
      if (r == pr) continue;
      T f = at(r, pc);
      if (Num<T>::zero(f)) continue;
      for (int c = 0; c <= n_; ++c) {
        const T& p = at(pr, c);
        if (!Num<T>::zero(p)) at(r, c) -= f * p;
      }
      at(r, pc) = T(0);
    }
  }

  int rows() const { return m_; }
  int cols() const { return n_; }

 private:
  int m_;
  int n_;
  std::vector<T> a_;
};

template <class T>
struct Solver {
  Tableau<T> tab;
  std::vector<int> basis;
  std::vector<char> allowed;  // columns that may enter
  long long iterations = 0;
  long long limit;

  Solver(int rows, int cols, long long lim) : tab(rows, cols), basis(rows, -1), allowed(cols, 1), limit(lim) {}

  // Loads costs into the objective row and prices out the basis.
  void set_objective(const std::vector<T>& cost) {
    for (int c = 0; c <= tab.cols(); ++c) tab.obj(c) = T(0);
    for (int c = 0; c < tab.cols(); ++c) tab.obj(c) = -cost[c];
    for (int r = 0; r < tab.rows(); ++r) {
      const T& cb = cost[basis[r]];
      if (Num<T>::zero(cb)) continue;
      for (int c = 0; c <= tab.cols(); ++c) {
        if (!Num<T>::zero(tab.at(r, c))) tab.obj(c) += cb * tab.at(r, c);
      }
    }
  }

  // Returns Optimal, Unbounded or IterationLimit.
  LpStatus optimize() {
    bool bland = Num<T>::exact;
    long long stall = 0;
    T last_value = tab.rhs(tab.rows());
    while (true) {
      if (++iterations > limit) return LpStatus::IterationLimit;
      int enter = -1;
      for (int c = 0; c < tab.cols(); ++c) {
        if (!allowed[c] || !Num<T>::neg(tab.obj(c))) continue;
        if (bland) {
          enter = c;
          break;
        }
        if (enter < 0 || tab.obj(c) < tab.obj(enter)) enter = c;
      }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      T best{};
      for (int r = 0; r < tab.rows(); ++r) {
        const T& e = tab.at(r, enter);
        if (!Num<T>::pos(e)) continue;
        T ratio = tab.rhs(r) / e;
        if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      tab.pivot(leave, enter);
      basis[leave] = enter;
      if (!Num<T>::exact) {
        T v = tab.rhs(tab.rows());
        if (Num<T>::zero(v - last_value)) {
          if (++stall > 50) bland = true;
        } else {
          stall = 0;
        }
        last_value = v;
      }
    }
  }
};

}  // namespace

template <class T>
LpResult<T> solve_lp(const LinearProgram<T>& lp, long long iteration_limit) {
  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.rows.size());
  // column layout: originals, then one slack/surplus per inequality, then artificials
  std::vector<Relation> rel(m);
  std::vector<bool> flip(m, false);
  int slack_count = 0;
  int art_count = 0;
  for (int r = 0; r < m; ++r) {
    rel[r] = lp.rows[r].rel;
    if (Num<T>::neg(lp.rows[r].rhs)) {
      flip[r] = true;
      if (rel[r] == Relation::Le) rel[r] = Relation::Ge;
      else if (rel[r] == Relation::Ge) rel[r] = Relation::Le;
    }
    if (rel[r] != Relation::Eq) ++slack_count;
    if (rel[r] != Relation::Le) ++art_count;
  }
  const int cols = n + slack_count + art_count;
  Solver<T> s(m, cols, iteration_limit);
  int next_slack = n;
  int next_art = n + slack_count;
  for (int r = 0; r < m; ++r) {
    const auto& row = lp.rows[r];
    for (const auto& [var, coef] : row.coeffs) {
      s.tab.at(r, var) += flip[r] ? T(-coef) : coef;
    }
    s.tab.rhs(r) = flip[r] ? T(-row.rhs) : row.rhs;
    if (rel[r] == Relation::Le) {
      s.tab.at(r, next_slack) = T(1);
      s.basis[r] = next_slack++;
    } else {
      if (rel[r] == Relation::Ge) s.tab.at(r, next_slack++) = T(-1);
      s.tab.at(r, next_art) = T(1);
      s.basis[r] = next_art++;
    }
  }

  LpResult<T> res;
  if (art_count > 0) {
    std::vector<T> phase1(cols, T(0));
    for (int c = n + slack_count; c < cols; ++c) phase1[c] = T(-1);
    s.set_objective(phase1);
    LpStatus st = s.optimize();
    if (st == LpStatus::IterationLimit) {
      res.status = st;
      return res;
    }
    if (Num<T>::neg(s.tab.rhs(m))) {
      res.status = LpStatus::Infeasible;
      return res;
    }
    for (int r = 0; r < m; ++r) {
      if (s.basis[r] < n + slack_count) continue;
      for (int c = 0; c < n + slack_count; ++c) {
        if (!Num<T>::zero(s.tab.at(r, c))) {
          s.tab.pivot(r, c);
          s.basis[r] = c;
          break;
        }
      }
    }
    for (int c = n + slack_count; c < cols; ++c) s.allowed[c] = 0;
  }
  std::vector<T> cost(cols, T(0));
  for (int c = 0; c < n; ++c) cost[c] = lp.objective[c];
  s.set_objective(cost);
  res.status = s.optimize();
  if (res.status != LpStatus::Optimal) return res;
  res.value = s.tab.rhs(m);
  res.x.assign(n, T(0));
  for (int r = 0; r < m; ++r) {
    if (s.basis[r] < n) res.x[s.basis[r]] = s.tab.rhs(r);
  }
  return res;
}

template LpResult<double> solve_lp(const LinearProgram<double>&, long long);
template LpResult<BigRational> solve_lp(const LinearProgram<BigRational>&, long long);

}  // namespace bk
