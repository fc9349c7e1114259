#include "bramblekit/constants.hpp"

#include <cctype>

#include "bramblekit/graph.hpp"

namespace bk {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      std::size_t used = 0;
      long long num = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw InputError("bad rational");
      std::string den_text = text.substr(slash + 1);
      long long den = std::stoll(den_text, &used);
      if (used != den_text.size() || den == 0) throw InputError("bad rational");
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      std::size_t used = 0;
      long long num = std::stoll(digits, &used);
      if (used != digits.size()) throw InputError("bad rational");
      long long den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return Rational(num, den);
    }
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw InputError("bad rational");
    return Rational(v);
  } catch (const std::logic_error&) {
    throw InputError("cannot parse rational '" + text + "'");
  }
}

Constants Constants::proof() { return Constants{}; }

Constants Constants::desk() {
  Constants c;
  c.beta0 = Rational(1, 54);
  c.beta1 = Rational(1, 3);
  c.beta2 = Rational(22, 81);
  c.c_deg = Rational(1, 4);
  c.c_conn = Rational(1, 8);
  c.top_x_factor = 1;
  c.top_y_factor = 1;
  c.top_z_factor = 1;
  c.c_top = Rational(1);
  c.c_web = Rational(0);
  c.c_degeneracy = Rational(1);
  return c;
}

void Constants::check() const {
  auto positive = [](const Rational& r, const char* name) {
    if (r <= 0) throw InputError(std::string(name) + " must be positive");
  };
  positive(beta0, "beta0");
  positive(beta1, "beta1");
  positive(beta2, "beta2");
  positive(c0, "c0");
  if (beta1 < 18 * beta0) throw InputError("constants: beta1 >= 18 beta0 violated");
  if (beta2 < 44 * beta0 * beta1) throw InputError("constants: beta2 >= 44 beta0 beta1 violated");
  if (c_deg < 0 || c_conn < 0 || c_top < 0 || c_web < 0 || c_degeneracy < 0) {
    throw InputError("constants: negative threshold");
  }
  if (exact_cut_cap < 1 || exact_cut_cap > 24) throw InputError("exact_cut_cap out of range");
  if (exact_treewidth_cap < 1 || exact_treewidth_cap > 24) {
    throw InputError("exact_treewidth_cap out of range");
  }
  if (hitting_set_max_elements < 1 || hitting_set_max_vertices < 1) {
    throw InputError("hitting-set caps must be positive");
  }
  if (top_x_factor < 1 || top_y_factor < 1 || top_z_factor < 1) {
    throw InputError("TOP-MINOR factors must be positive");
  }
  if (flow_epsilon <= 0 || flow_epsilon >= 1) throw InputError("flow_epsilon must lie in (0, 1)");
  if (flow_exact_var_cap < 0 || flow_max_phases < 1) throw InputError("flow caps out of range");
  if (moser_resample_cap < 1) throw InputError("moser_resample_cap must be positive");
}

int Constants::separator_budget(int k) const {
  Rational s = beta1 * Rational(k);
  std::int64_t c = s.numerator() / s.denominator();
  if (c * s.denominator() < s.numerator()) ++c;
  return static_cast<int>(std::max<std::int64_t>(1, c));
}

}  // namespace bk
