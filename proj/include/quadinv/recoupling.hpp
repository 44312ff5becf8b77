#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadinv/rational.hpp"

namespace quadinv {

// Nonnegative half-integer, stored as twice its value.
class HalfInt {
 public:
  HalfInt() = default;
  static HalfInt from_twice(int twice);
  static HalfInt whole(int value) { return from_twice(2 * value); }

  int twice() const { return twice_; }
  bool is_integral() const { return twice_ % 2 == 0; }
  Rational value() const { return Rational(twice_, 2); }
  std::string to_string() const { return value().to_string(); }

  friend bool operator==(HalfInt, HalfInt) = default;

 private:
  explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

// a + b + c integral and |a - b| <= c <= a + b.
bool is_triad(HalfInt a, HalfInt b, HalfInt c);

// rational_part * sqrt(radicand), radicand >= 0.
struct SqrtRational {
  Rational rational_part;
  Rational radicand{1};

  bool is_zero() const { return rational_part.is_zero() || radicand.is_zero(); }
  // True when the radicand is the square of a rational.
  bool is_rational() const;
  // The exact value; InternalError unless is_rational().
  Rational exact_value() const;
  // value^2 with the sign of the value, enough to compare two carriers.
  Rational signed_square() const;

  friend SqrtRational operator*(const SqrtRational& x, const SqrtRational& y) {
    return {x.rational_part * y.rational_part, x.radicand * y.radicand};
  }
  friend bool operator==(const SqrtRational& x, const SqrtRational& y) {
    return x.signed_square() == y.signed_square();
  }
};

// Labels of a tetrahedron / 6-j symbol {j1 j2 j12; j3 J j23}.
struct SixLabels {
  HalfInt j1, j2, j3, j12, j23, J;
};

// Delta(a,b,c)^2 = (a+b-c)!(a+c-b)!(b+c-a)! / (a+b+c+1)!
Rational triangle_delta_sq(HalfInt a, HalfInt b, HalfInt c);

// Wigner 6-j symbol via Racah's single sum; radicand is the product of the
// four triangle deltas squared.
SqrtRational racah_6j(const SixLabels& l);

// Clebsch-Gordan normalisation of the closed tetrahedron graph,
// (-1)^(j1+j2+j3+J) (V/E) sum_n (-1)^n (n+1)! / prod (n-T_i)! prod (S_j-n)!
Rational tetra_cg(const SixLabels& l);

// Factors of the open tetrahedron map S_2J -> S_2J.
Rational tetra_normalisation(const SixLabels& l);  // P1 / E
SqrtRational alpha_tilde(const SixLabels& l);

// Coefficients theta_k in
//   (A,(B,C)_r)_s = sum_k theta_k ((A,B)_k, C)_(r+s-k)
// for forms of orders a, b, c.
struct ThetaTable {
  int a = 0, b = 0, c = 0, r = 0, s = 0;
  std::map<int, Rational> coefficients;  // nonzero entries only

  Rational at(int k) const;
  // The six inequalities bounding the nonzero theta_k.
  bool in_window(int k) const;
};

ThetaTable theta_coefficients(int a, int b, int c, int r, int s);

// omega(a,b;r,s;t) for F of order d, the coefficient of
// Delta^((a+b-t)/2) (Q^t,F)_(r+s-a-b+t) in (Q^a,(Q^b,F)_r)_s.
// Zero for t outside the admissible window or of the wrong parity.
Rational omega(int a, int b, int r, int s, int t, int d);

// Inclusive t-range of the omega expansion (parity t = a+b mod 2 aside).
struct TRange {
  int lo;
  int hi;
};
TRange omega_t_range(int a, int b, int r, int s, int d);

struct CompoundTerm {
  Rational coefficient;
  int delta_power;
  int transvectant_index;
};

// Every nonzero omega(a,b;r,s;t) keyed by t.
std::map<int, CompoundTerm> expand_compound(int a, int b, int r, int s, int d);

// Transition coefficient G_{i,j} between the parallel and transvectant
// bases, 0 <= i, j <= floor(d/2); zero below the diagonal.
Rational transition_G(int i, int j, int d);

}  // namespace quadinv
