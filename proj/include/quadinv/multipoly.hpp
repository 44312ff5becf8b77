#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "quadinv/rational.hpp"

namespace quadinv {

// An ordered list of symbol names. Shared between every polynomial built
// over the same ring so that compatibility checks are usually a pointer
// comparison.
using Variables = std::shared_ptr<const std::vector<std::string>>;

// Builds a variable list. Names must be nonempty and pairwise distinct.
Variables make_variables(std::vector<std::string> names);

// Convenience for the usual families: {"q0","q1","q2"} + {"a0",...,"a<d>"}.
std::vector<std::string> indexed_names(std::string_view stem, int count);

// Sparse multivariate polynomial with exact rational coefficients.
//
// The variable order is fixed when the polynomial is built. Two operands
// must share the same ordered variable list unless one of them is a
// constant; anything else raises IncompatibleVariablesError rather than
// silently matching symbols by position.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint16_t>;
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(std::int64_t c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly constant(const Variables& vars, const Rational& c);
  static MultiPoly variable(const Variables& vars, std::string_view name);
  static MultiPoly variable(const Variables& vars, std::size_t index);
  static MultiPoly monomial(const Variables& vars, Exponents exponents, const Rational& c);

  const Variables& variables() const { return vars_; }
  std::size_t variable_count() const { return vars_ ? vars_->size() : 0; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the constant monomial.
  Rational constant_term() const;
  Rational coefficient(const Exponents& exponents) const;
  int total_degree() const;

  // Replaces bound symbols by polynomials; unbound symbols stay symbolic and
  // bindings for symbols outside the variable list are ignored. Each bound
  // polynomial must be compatible with this one's variables.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;

  // Re-expresses this polynomial over a larger variable list, matching
  // symbols by name. Every symbol that occurs must exist in `target`.
  MultiPoly embed(const Variables& target) const;

  MultiPoly pow(unsigned k) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // Human-readable rendering, e.g. "q0^3 + 4/5*q0*q1^2".
  std::string to_string() const;

 private:
  // Brings `o` onto this polynomial's variables (or adopts o's variables
  // when this one is a constant).
  MultiPoly aligned_copy(const MultiPoly& o);
  void drop_zeros();

  Variables vars_;
  TermMap terms_;
};

bool same_variables(const Variables& a, const Variables& b);

}  // namespace quadinv
