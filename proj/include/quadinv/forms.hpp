#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "quadinv/binary_form.hpp"

namespace quadinv {

// d^(p1+p2) F / dx1^p1 dx2^p2, a form of order m - p1 - p2 (zero form of
// order 0 if the derivative order exceeds m).
template <class R>
BinaryForm<R> partial(const BinaryForm<R>& f, int p1, int p2) {
  const int m = f.order();
  if (p1 < 0 || p2 < 0) throw RangeError("negative derivative order");
  if (p1 + p2 > m) return BinaryForm<R>(0);
  BinaryForm<R> out(m - p1 - p2);
  for (int k = p2; k <= m - p1; ++k) {
    if (is_zero(f[k])) continue;
    const BigInt w = falling_factorial(m - k, p1) * falling_factorial(k, p2);
    out[k - p2] = f[k] * Rational(w);
  }
  return out;
}

// r-th transvectant
//
//   (A,B)_r = (m-r)!(n-r)!/(m!n!) sum_i (-1)^i C(r,i)
//             d^r A/dx1^(r-i) dx2^i * d^r B/dx1^i dx2^(r-i)
//
// for A of order m and B of order n; the result has order m + n - 2r.
template <class R>
BinaryForm<R> transvectant(const BinaryForm<R>& a, const BinaryForm<R>& b, int r) {
  const int m = a.order();
  const int n = b.order();
  if (r < 0 || r > m || r > n) {
    throw RangeError("transvectant index " + std::to_string(r) + " out of range for orders " +
                     std::to_string(m) + ", " + std::to_string(n));
  }
  BinaryForm<R> out(m + n - 2 * r);
  for (int i = 0; i <= r; ++i) {
    const BinaryForm<R> da = partial(a, r - i, i);
    const BinaryForm<R> db = partial(b, i, r - i);
    Rational w(binomial(r, i));
    if (i % 2 == 1) w = -w;
    for (int k = 0; k <= da.order(); ++k) {
      if (is_zero(da[k])) continue;
      const R lhs = da[k] * w;
      for (int l = 0; l <= db.order(); ++l) {
        if (is_zero(db[l])) continue;
        out[k + l] += lhs * db[l];
      }
    }
  }
  return out * factorial_ratio({m - r, n - r}, {m, n});
}

// Delta_Q = -2 (Q,Q)_2 = 4 (q1^2 - q0 q2) in Cayley coordinates of Q.
template <class R>
R delta(const BinaryForm<R>& q) {
  if (q.order() != 2) throw RangeError("delta needs a quadratic form");
  return transvectant(q, q, 2)[0] * Rational(-2);
}

template <class R>
BinaryForm<R> form_pow(const BinaryForm<R>& q, int k) {
  if (k < 0) throw RangeError("negative power of a form");
  BinaryForm<R> result = BinaryForm<R>::constant(R(1));
  BinaryForm<R> base = q;
  unsigned e = static_cast<unsigned>(k);
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

// 2x2 substitution x1 -> m[0] x1 + m[1] x2, x2 -> m[2] x1 + m[3] x2.
template <class R>
using Substitution = std::array<R, 4>;

// F composed with a determinant-one linear substitution.
template <class R>
BinaryForm<R> unimodular_substitute(const BinaryForm<R>& f, const Substitution<R>& m) {
  const R det = m[0] * m[3] - m[1] * m[2];
  if (!(det == R(1))) throw ValidationError("substitution matrix must have determinant 1");
  const auto x1 = BinaryForm<R>(1, {m[0], m[1]});
  const auto x2 = BinaryForm<R>(1, {m[2], m[3]});
  const int d = f.order();
  BinaryForm<R> out(d);
  for (int i = 0; i <= d; ++i) {
    if (is_zero(f[i])) continue;
    out += (form_pow(x1, d - i) * form_pow(x2, i)).scaled(f[i]);
  }
  return out;
}

template <class R>
struct QuarticCovariants {
  R a;  // (F,F)_4
  R b;  // (F,(F,F)_2)_4
};

template <class R>
QuarticCovariants<R> quartic_covariants(const BinaryForm<R>& f) {
  if (f.order() != 4) throw RangeError("quartic covariants need an order-4 form");
  const R a = transvectant(f, f, 4)[0];
  const R b = transvectant(f, transvectant(f, f, 2), 4)[0];
  return {a, b};
}

// j(F) = A^3 / (A^3 - 6 B^2).
Rational j_invariant(const RationalForm& f);

// --- symbolic helpers --------------------------------------------------

// Lifts a rational form into the polynomial ring over `vars`.
PolyForm lift(const RationalForm& f, const Variables& vars);

// Form with Cayley coefficients given by the symbols stem0..stem<order>,
// which must be present in `vars`.
PolyForm generic_form(const Variables& vars, std::string_view stem, int order);

// Ring Q[q0,q1,q2,a0..ad] with the generic quadratic Q = (q0,q1,q2 | x)^2
// and the generic d-ic F = (a0,...,ad | x)^d.
struct GenericQF {
  Variables vars;
  PolyForm q;
  PolyForm f;
  MultiPoly delta;
};
GenericQF generic_q_and_f(int d);

// Generic quadratic alone, over {q0,q1,q2}.
struct GenericQ {
  Variables vars;
  PolyForm q;
  MultiPoly delta;
};
GenericQ generic_q();

}  // namespace quadinv
