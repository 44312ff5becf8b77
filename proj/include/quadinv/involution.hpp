#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadinv/forms.hpp"

namespace quadinv {

// s_0 ... s_d with s_i = +-1 and s_{d-i} = (-1)^d s_i.
class SignSequence {
 public:
  // Parses "+--+" style strings; the symmetry is validated, not repaired.
  static SignSequence parse(std::string_view text);
  static SignSequence from_signs(std::vector<int> signs);
  // Completes s_0 ... s_n (n = floor(d/2)) using the symmetry.
  static SignSequence complete_from_initial(int d, const std::vector<int>& initial);
  // (-,+,...,-,+) for odd d, (+,-,+,...,-,+) for even d.
  static SignSequence gamma(int d);
  static SignSequence all_plus(int d);

  int degree() const { return static_cast<int>(signs_.size()) - 1; }
  int operator[](int i) const { return signs_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& signs() const { return signs_; }
  SignSequence negated() const;
  std::string to_string() const;

  friend bool operator==(const SignSequence&, const SignSequence&) = default;

 private:
  explicit SignSequence(std::vector<int> signs) : signs_(std::move(signs)) {}
  std::vector<int> signs_;
};

struct Involutor {
  int d = 0;
  std::vector<Rational> z;  // z_0 ... z_n

  friend bool operator==(const Involutor&, const Involutor&) = default;
};

// SYS(d): alpha^(t)_{i,j} = omega(d-2j, d-2i; d-2i, d-2j; t) for even t,
// stored unsymmetrised.
class QuadraticSystem {
 public:
  QuadraticSystem(int d, std::vector<std::vector<std::vector<Rational>>> table);

  int degree() const { return d_; }
  int half_degree() const { return d_ / 2; }
  // t even, 0 <= t <= 2n; zero outside the table.
  Rational alpha(int t, int i, int j) const;
  // sum_{i,j} alpha^(t)_{i,j} z_i z_j
  Rational evaluate(int t, const std::vector<Rational>& z) const;
  // Equations t = 2..2n vanish and the norm condition (t = 0) equals 1.
  bool is_satisfied_by(const std::vector<Rational>& z) const;
  // Coefficient of z_i z_j (i <= j) after collecting alpha_ij + alpha_ji.
  std::vector<std::pair<std::pair<int, int>, Rational>> collected(int t) const;
  // e.g. "-25/20328*z0^2 + 5/3234*z0*z1 + ... = 0"
  std::string render_equation(int t) const;

  friend bool operator==(const QuadraticSystem&, const QuadraticSystem&) = default;

 private:
  int d_;
  std::vector<std::vector<std::vector<Rational>>> table_;  // [t/2][i][j]
};

// g_i = 2^(d-2i) d! (d-i)! (2d-4i+1)! / (i! (d-2i)!^2 (2d-2i+1)!)
Involutor geometric_involutor(int d);

// Closed form z_i(s) = E_{1,i} E_{2,i}.
Involutor z_from_sign(const SignSequence& s);

struct SignedInvolutor {
  SignSequence sign;
  Involutor z;
};

// --- parallel kernels and their serial references ------------------------

QuadraticSystem build_sys(int d);
QuadraticSystem build_sys_ref(int d);

// All 2^(n+1) involutors, ordered lexicographically over s_0..s_n with
// '+' before '-'.
std::vector<SignedInvolutor> enumerate_involutors(int d);
std::vector<SignedInvolutor> enumerate_involutors_ref(int d);

// sigma∘sigma(F) = Delta^d F for generic Q and F, one flag per involutor.
std::vector<bool> verify_symbolic_all(const std::vector<Involutor>& zs);
std::vector<bool> verify_symbolic_all_ref(const std::vector<Involutor>& zs);

// -------------------------------------------------------------------------

template <class R>
R ring_pow(const R& x, int k) {
  return x.pow(static_cast<unsigned>(k));
}

// sigma_{Q,z}(F) = sum_i z_i Delta^i (Q^(d-2i), F)_(d-2i)
template <class R>
BinaryForm<R> sigma_apply(const BinaryForm<R>& q, const Involutor& z, const BinaryForm<R>& f) {
  if (q.order() != 2) throw RangeError("sigma needs a quadratic Q");
  const int d = f.order();
  if (z.d != d || static_cast<int>(z.z.size()) != d / 2 + 1) {
    throw RangeError("involutor for d=" + std::to_string(z.d) + " applied to a form of order " +
                     std::to_string(d));
  }
  const R dq = delta(q);
  BinaryForm<R> out(d);
  for (int i = 0; i <= d / 2; ++i) {
    if (z.z[i].is_zero()) continue;
    const BinaryForm<R> tv = transvectant(form_pow(q, d - 2 * i), f, d - 2 * i);
    out += tv.scaled(ring_pow(dq, i) * z.z[i]);
  }
  return out;
}

// 2^d prod_i (Q, l_i)_1 for linear factors l_1..l_d.
template <class R>
BinaryForm<R> sigma_product_form(const BinaryForm<R>& q, const std::vector<BinaryForm<R>>& factors) {
  if (factors.empty()) throw RangeError("sigma of a product needs at least one factor");
  if (q.order() != 2) throw RangeError("sigma needs a quadratic Q");
  BinaryForm<R> out = BinaryForm<R>::constant(R(1));
  for (const auto& l : factors) {
    if (l.order() != 1) throw RangeError("factors must be linear forms");
    out = out * transvectant(q, l, 1);
  }
  return out * Rational(pow2(factors.size()));
}

// The defining condition of a centre of involution: sigma(F) = Delta^(d/2) F
// for even d, sigma(F)^2 = Delta^d F^2 for odd d.
template <class R>
BinaryForm<R> centre_residual(const BinaryForm<R>& q, const Involutor& z, const BinaryForm<R>& f) {
  const BinaryForm<R> sf = sigma_apply(q, z, f);
  const R dq = delta(q);
  const int d = f.order();
  if (d % 2 == 0) return sf - f.scaled(ring_pow(dq, d / 2));
  return sf * sf - (f * f).scaled(ring_pow(dq, d));
}

enum class VerifyMode { Fast, Symbolic };

// Fast: membership in SYS(d). Symbolic: sigma∘sigma(F) - Delta^d F == 0
// with q0,q1,q2,a0..ad all symbolic.
bool verify_involutor(const Involutor& z, VerifyMode mode);

struct VerifyReport {
  bool fast;
  bool symbolic;
  bool agree() const { return fast == symbolic; }
};
VerifyReport verify_both(const Involutor& z);

struct CanonicalBasis {
  // Monomials x1^(d-i) x2^i, listed by i.
  std::vector<int> plus;
  std::vector<int> minus;
};
CanonicalBasis canonical_basis(const SignSequence& s);

// Even d: F supported on the plus monomials. Odd d: on the plus monomials or
// on the minus monomials.
bool canonical_check(const SignSequence& s, const RationalForm& f);

}  // namespace quadinv
