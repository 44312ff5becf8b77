#include "quadinv/forms.hpp"

namespace quadinv {

Rational j_invariant(const RationalForm& f) {
  const auto [a, b] = quartic_covariants(f);
  const Rational a3 = a.pow(3);
  const Rational den = a3 - Rational(6) * b * b;
  if (den.is_zero()) throw DegenerateFormError("j-invariant undefined: A^3 - 6 B^2 = 0");
  return a3 / den;
}

PolyForm lift(const RationalForm& f, const Variables& vars) {
  return f.map([&](const Rational& c) { return MultiPoly::constant(vars, c); });
}

PolyForm generic_form(const Variables& vars, std::string_view stem, int order) {
  std::vector<MultiPoly> cayley;
  cayley.reserve(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    cayley.push_back(MultiPoly::variable(vars, std::string(stem) + std::to_string(i)));
  }
  return PolyForm::from_cayley(std::move(cayley));
}

GenericQF generic_q_and_f(int d) {
  auto names = indexed_names("q", 3);
  for (auto& a : indexed_names("a", d + 1)) names.push_back(std::move(a));
  GenericQF g;
  g.vars = make_variables(std::move(names));
  g.q = generic_form(g.vars, "q", 2);
  g.f = generic_form(g.vars, "a", d);
  g.delta = delta(g.q);
  return g;
}

GenericQ generic_q() {
  GenericQ g;
  g.vars = make_variables(indexed_names("q", 3));
  g.q = generic_form(g.vars, "q", 2);
  g.delta = delta(g.q);
  return g;
}

}  // namespace quadinv
