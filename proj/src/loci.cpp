#include "quadinv/loci.hpp"

#include <array>

namespace quadinv {

CentreSystem centre_conditions(const Involutor& z, const RationalForm& f) {
  if (f.order() != z.d) throw RangeError("form order does not match the involutor");
  const GenericQ g = generic_q();
  const PolyForm residual = centre_residual(g.q, z, lift(f, g.vars));
  CentreSystem out{z.d, {}};
  for (const auto& c : residual.raw()) {
    if (!c.is_zero()) out.generators.push_back(c);
  }
  return out;
}

PolyForm beta_covariant(const RationalForm& f) {
  const GenericQ g = generic_q();
  return beta_covariant(g.q, lift(f, g.vars));
}

PolyForm lambda_covariant(const RationalForm& f) {
  const GenericQ g = generic_q();
  return lambda_covariant(g.q, lift(f, g.vars));
}

MultiPoly ternary_discriminant(const MultiPoly& quadratic, const std::vector<std::size_t>& vars) {
  if (vars.size() != 3) throw RangeError("ternary discriminant needs three variables");
  if (quadratic.is_zero()) return MultiPoly(0);
  const Variables& ring = quadratic.variables();
  for (const auto v : vars) {
    if (v >= quadratic.variable_count()) throw RangeError("variable index out of range");
  }
  std::array<std::array<MultiPoly, 3>, 3> m;
  for (auto& row : m) row.fill(MultiPoly::constant(ring, Rational(0)));
  for (const auto& [exps, c] : quadratic.terms()) {
    std::vector<int> hit;
    for (int k = 0; k < 3; ++k) {
      for (int e = 0; e < exps[vars[k]]; ++e) hit.push_back(k);
    }
    if (hit.size() != 2) throw ValidationError("polynomial is not quadratic in the chosen variables");
    MultiPoly::Exponents rest = exps;
    for (const auto v : vars) rest[v] = 0;
    const MultiPoly coeff = MultiPoly::monomial(ring, rest, c);
    if (hit[0] == hit[1]) {
      m[hit[0]][hit[0]] += coeff;
    } else {
      const MultiPoly h = coeff * Rational(1, 2);
      m[hit[0]][hit[1]] += h;
      m[hit[1]][hit[0]] += h;
    }
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Rational catalecticant_constant() { return Rational(2, 3); }

Rational quartic_centre_discriminant(const RationalForm& f) {
  if (f.order() != 4) throw RangeError("centre discriminant needs a quartic");
  const GenericQ g = generic_q();
  const MultiPoly conic = transvectant(form_pow(g.q, 2), lift(f, g.vars), 4)[0];
  const MultiPoly det = ternary_discriminant(conic, {0, 1, 2});
  const Rational value = det.constant_term();
  const Rational b = quartic_covariants(f).b;
  if (!(value == catalecticant_constant() * b)) {
    throw InternalError("centre discriminant " + value.to_string() + " is not 2/3 B_F = " +
                        (catalecticant_constant() * b).to_string());
  }
  return value;
}

MultiPoly sextic_cubic_curve(const RationalForm& f) {
  if (f.order() != 6) throw RangeError("the cubic curve needs a sextic");
  const GenericQ g = generic_q();
  return transvectant(form_pow(g.q, 3), lift(f, g.vars), 6)[0];
}

}  // namespace quadinv
