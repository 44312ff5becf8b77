#pragma once

#include <vector>

#include "quadinv/involution.hpp"

namespace quadinv {

// Defining polynomials of the centre locus of (z, F) in q0, q1, q2: the
// nonzero x-coefficients of centre_residual with Q generic. They are not
// saturated by Delta, so they also cut out extraneous points on the conic
// Delta = 0.
struct CentreSystem {
  int d = 0;
  std::vector<MultiPoly> generators;
};
CentreSystem centre_conditions(const Involutor& z, const RationalForm& f);

// beta = (Q^2, F)_3 for a quartic F.
template <class R>
BinaryForm<R> beta_covariant(const BinaryForm<R>& q, const BinaryForm<R>& f) {
  if (f.order() != 4) throw RangeError("beta needs a quartic");
  return transvectant(form_pow(q, 2), f, 3);
}

// lambda = (Q^3, F)_5 for a sextic F.
template <class R>
BinaryForm<R> lambda_covariant(const BinaryForm<R>& q, const BinaryForm<R>& f) {
  if (f.order() != 6) throw RangeError("lambda needs a sextic");
  return transvectant(form_pow(q, 3), f, 5);
}

// 16 (Q^3,F)_4 + 24/5 (Q,F)_2 Delta, the bracket in the quartic geometric
// residual sigma_{Q,g}(F) - Delta^2 F = Q * alpha.
template <class R>
BinaryForm<R> alpha_geom_quartic(const BinaryForm<R>& q, const BinaryForm<R>& f) {
  if (f.order() != 4) throw RangeError("alpha needs a quartic");
  return transvectant(form_pow(q, 3), f, 4) * Rational(16) +
         transvectant(q, f, 2).scaled(delta(q) * Rational(24, 5));
}

// (Q^4,F)_6 + 2/7 Delta (Q^2,F)_4 for a sextic F.
template <class R>
BinaryForm<R> mu_sextic(const BinaryForm<R>& q, const BinaryForm<R>& f) {
  if (f.order() != 6) throw RangeError("mu needs a sextic");
  return transvectant(form_pow(q, 4), f, 6) +
         transvectant(form_pow(q, 2), f, 4).scaled(delta(q) * Rational(2, 7));
}

// Generic-Q versions for a rational F; coefficients live in Q[q0,q1,q2].
PolyForm beta_covariant(const RationalForm& f);
PolyForm lambda_covariant(const RationalForm& f);

// Determinant of the symmetric matrix of a quadratic form in three of the
// ring's variables; the other variables are treated as coefficients.
// M_ii is the coefficient of v_i^2, M_ij half that of v_i v_j.
MultiPoly ternary_discriminant(const MultiPoly& quadratic, const std::vector<std::size_t>& vars);

// det((Q^2,F)_4 as a ternary quadratic in q) = c * B_F.
Rational catalecticant_constant();  // c = 2/3

// The discriminant of the conic (Q^2,F)_4 = 0 of a quartic F. Checked
// against catalecticant_constant() * B_F on every call.
Rational quartic_centre_discriminant(const RationalForm& f);

// The cubic (Q^3,F)_6 in q0, q1, q2 for a sextic F.
MultiPoly sextic_cubic_curve(const RationalForm& f);

}  // namespace quadinv
