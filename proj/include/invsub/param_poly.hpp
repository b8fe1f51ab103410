#ifndef INVSUB_PARAM_POLY_HPP
#define INVSUB_PARAM_POLY_HPP

#include "invsub/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace invsub {

/// Exponent tuple, one entry per parameter.
using Monomial = std::vector<int>;

/// Polynomial with rational coefficients in k parameters t_1..t_k.
/// Zero coefficients are never stored; k = 0 is a plain rational.
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(int k) : k_(k) {}
  ParamPoly(int k, const Rational& c);

  static ParamPoly variable(int k, int index);
  static ParamPoly from_terms(int k, const std::map<Monomial, Rational>& terms);

  int k() const noexcept { return k_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Rational constant() const;
  int total_degree() const;
  int degree_in(int var) const;
  bool involves(int var) const { return degree_in(var) > 0; }
  std::vector<int> variables() const;

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly operator*(const Rational& c) const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  /// this += a * b, without building the intermediate product.
  void add_product(const ParamPoly& a, const ParamPoly& b, int sign = 1);

  bool operator==(const ParamPoly& o) const = default;
  bool operator<(const ParamPoly& o) const;

  /// Coefficient of var^power viewed as a polynomial in the other
  /// parameters (same k, var absent).
  ParamPoly coefficient_of(int var, int power) const;

  ParamPoly substitute(int var, const ParamPoly& value) const;
  /// Replaces every var with an engaged entry; others stay.
  ParamPoly substitute(const std::vector<std::optional<ParamPoly>>& values) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Re-indexes into a k' parameter space; mapping[i] is the new index of
  /// old parameter i, or -1 if that parameter must not occur.
  ParamPoly remap(int new_k, const std::vector<int>& mapping) const;

  /// Leading term under graded lexicographic order (t_1 > t_2 > ...).
  std::pair<Monomial, Rational> leading_term() const;
  /// Divides by the leading coefficient.
  ParamPoly monic() const;
  /// Multiplies by -1 if the leading coefficient is negative.
  ParamPoly sign_normalized() const;

  /// Exact quotient if `divisor` divides this polynomial.
  std::optional<ParamPoly> exact_divide(const ParamPoly& divisor) const;

  /// Text such as "3/2*t1^2 - t2 + 1"; `names` overrides parameter names.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int k_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// Default parameter names t1, t2, ...
std::vector<std::string> default_parameter_names(int k);

/// Parses the output of ParamPoly::to_string with default names t1..tk.
/// Throws std::invalid_argument on malformed text or unknown variables.
ParamPoly parse_param_poly(const std::string& text, int k);

}  // namespace invsub

#endif  // INVSUB_PARAM_POLY_HPP
