#include "quadinv/recoupling.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <shared_mutex>

#include "quadinv/errors.hpp"
#include "quadinv/factorial.hpp"

namespace quadinv {

namespace {

// Half of a doubled quantity that must be a whole number.
long half(int twice) {
  if (twice % 2 != 0) throw InternalError("non-integral factorial argument (triad bug)");
  return twice / 2;
}

Rational parity_sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

bool is_perfect_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt integer_sqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

void require_tetra_triads(const SixLabels& l) {
  if (!is_triad(l.j1, l.j2, l.j12) || !is_triad(l.j2, l.j3, l.j23) ||
      !is_triad(l.j1, l.j23, l.J) || !is_triad(l.j12, l.j3, l.J)) {
    throw TriadError("labels {" + l.j1.to_string() + " " + l.j2.to_string() + " " +
                     l.j12.to_string() + "; " + l.j3.to_string() + " " + l.J.to_string() + " " +
                     l.j23.to_string() + "} violate a triad condition");
  }
}

// Triad sums (lower bounds of the Racah summation) and four-label sums
// (upper bounds), both as whole numbers.
struct RacahBounds {
  std::array<long, 4> t;
  std::array<long, 3> s;
};

RacahBounds racah_bounds(const SixLabels& l) {
  const int a = l.j1.twice(), b = l.j2.twice(), c = l.j3.twice();
  const int ab = l.j12.twice(), bc = l.j23.twice(), J = l.J.twice();
  return {{half(a + b + ab), half(b + c + bc), half(a + bc + J), half(ab + c + J)},
          {half(a + b + c + J), half(b + ab + bc + J), half(a + c + ab + bc)}};
}

// sum_n (-1)^n (n+1)! / (prod_i (n - T_i)! prod_j (S_j - n)!)
Rational racah_sum(const RacahBounds& bd) {
  const long lo = *std::max_element(bd.t.begin(), bd.t.end());
  const long hi = *std::min_element(bd.s.begin(), bd.s.end());
  Rational sum;
  for (long n = lo; n <= hi; ++n) {
    Rational term = factorial_ratio({n + 1}, {n - bd.t[0], n - bd.t[1], n - bd.t[2], n - bd.t[3],
                                              bd.s[0] - n, bd.s[1] - n, bd.s[2] - n});
    if (n % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

// (x+y-z)! (x+z-y)! (y+z-x)! for a vertex with doubled labels x, y, z.
Rational vertex_factor(int x, int y, int z) {
  return factorial_ratio({half(x + y - z), half(x + z - y), half(y + z - x)}, {});
}

long four_sum_sign_exponent(const SixLabels& l) {
  return half(l.j1.twice() + l.j2.twice() + l.j3.twice() + l.J.twice());
}

}  // namespace

HalfInt HalfInt::from_twice(int twice) {
  if (twice < 0) throw RangeError("half-integer labels must be nonnegative");
  return HalfInt(twice);
}

bool is_triad(HalfInt a, HalfInt b, HalfInt c) {
  const int x = a.twice(), y = b.twice(), z = c.twice();
  if ((x + y + z) % 2 != 0) return false;
  return z >= std::abs(x - y) && z <= x + y;
}

bool SqrtRational::is_rational() const {
  return radicand.sign() >= 0 && is_perfect_square(radicand.numerator()) &&
         is_perfect_square(radicand.denominator());
}

Rational SqrtRational::exact_value() const {
  if (!is_rational()) {
    throw InternalError("square root of " + radicand.to_string() + " is not rational");
  }
  return rational_part *
         Rational(integer_sqrt(radicand.numerator()), integer_sqrt(radicand.denominator()));
}

Rational SqrtRational::signed_square() const {
  const Rational sq = rational_part * rational_part * radicand;
  return rational_part.sign() < 0 ? -sq : sq;
}

Rational triangle_delta_sq(HalfInt a, HalfInt b, HalfInt c) {
  if (!is_triad(a, b, c)) {
    throw TriadError("(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() +
                     ") is not a triad");
  }
  const int x = a.twice(), y = b.twice(), z = c.twice();
  return factorial_ratio({half(x + y - z), half(x + z - y), half(y + z - x)},
                         {half(x + y + z) + 1});
}

SqrtRational racah_6j(const SixLabels& l) {
  require_tetra_triads(l);
  const Rational rad = triangle_delta_sq(l.j1, l.j2, l.j12) * triangle_delta_sq(l.j2, l.j3, l.j23) *
                       triangle_delta_sq(l.j1, l.j23, l.J) * triangle_delta_sq(l.j12, l.j3, l.J);
  return {racah_sum(racah_bounds(l)), rad};
}

Rational tetra_cg(const SixLabels& l) {
  require_tetra_triads(l);
  const int a = l.j1.twice(), b = l.j2.twice(), c = l.j3.twice();
  const int ab = l.j12.twice(), bc = l.j23.twice(), J = l.J.twice();
  const Rational vertices = vertex_factor(a, b, ab) * vertex_factor(b, c, bc) *
                            vertex_factor(a, bc, J) * vertex_factor(ab, c, J);
  const Rational edges = factorial_ratio({a, b, c, ab, bc, J}, {});
  return parity_sign(four_sum_sign_exponent(l)) * vertices / edges * racah_sum(racah_bounds(l));
}

Rational tetra_normalisation(const SixLabels& l) {
  require_tetra_triads(l);
  const int a = l.j1.twice(), b = l.j2.twice(), c = l.j3.twice();
  const int ab = l.j12.twice(), bc = l.j23.twice(), J = l.J.twice();
  return factorial_ratio({half(a + ab - b), half(b + ab - a), half(ab + J - c), half(c + J - ab)},
                         {a, b, c, ab, bc, J});
}

SqrtRational alpha_tilde(const SixLabels& l) {
  require_tetra_triads(l);
  const int a = l.j1.twice(), b = l.j2.twice(), c = l.j3.twice();
  const int ab = l.j12.twice(), bc = l.j23.twice(), J = l.J.twice();
  const Rational alpha_tilde_p1 = factorial_ratio(
      {half(a + ab - b), half(b + ab - a), half(ab + J - c), half(c + J - ab)}, {});
  const Rational alpha_tilde_p2 =
      factorial_ratio({half(a + bc - J), half(a + J - bc), half(bc + J - a), half(b + c - bc),
                       half(b + bc - c), half(c + bc - b), half(a + b - ab), half(ab + c - J)},
                      {});
  const Rational alpha_tilde_p3 =
      factorial_ratio({half(a + b + ab) + 1, half(b + c + bc) + 1, half(a + bc + J) + 1,
                       half(ab + c + J) + 1},
                      {});
  const SqrtRational sixj = racah_6j(l);
  const Rational prefactor = parity_sign(four_sum_sign_exponent(l)) / Rational(J + 1);
  return {prefactor * sixj.rational_part,
          alpha_tilde_p2 * alpha_tilde_p3 / alpha_tilde_p1 * sixj.radicand};
}

// --- theta --------------------------------------------------------------

bool ThetaTable::in_window(int k) const {
  return k >= 0 && k >= r + s - c && k <= a && k <= a + b - r - s && k <= b && k <= r + s;
}

Rational ThetaTable::at(int k) const {
  const auto it = coefficients.find(k);
  return it == coefficients.end() ? Rational(0) : it->second;
}

namespace {

Rational theta_t2(int a, int b, int c, int r, int s, int k) {
  const long lo = std::max({a + b - k, b + c - r, a + b + c - 2 * r - s, a + b + c - r - s - k});
  const long hi = std::min({a + b + c - r - s, a + b + c - r - k, a + 2 * b + c - 2 * r - s - k});
  Rational sum;
  for (long z = std::max(lo, 0L); z <= hi; ++z) {
    Rational term = factorial_ratio(
        {z + 1}, {z - a - b + k, z - b - c + r, z - a - b - c + 2 * r + s,
                  z - a - b - c + r + s + k, a + b + c - r - s - z, a + b + c - r - k - z,
                  a + 2 * b + c - 2 * r - s - k - z});
    if (z % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace

ThetaTable theta_coefficients(int a, int b, int c, int r, int s) {
  if (a < 0 || b < 0 || c < 0 || r < 0 || s < 0 || r > std::min(b, c) ||
      s > std::min(a, b + c - 2 * r)) {
    throw RangeError("theta coefficients need 0 <= r <= min(b,c), 0 <= s <= min(a, b+c-2r)");
  }
  ThetaTable table{a, b, c, r, s, {}};
  const Rational t1 = factorial_ratio({r, b - r, c - r, s, a - s, b + c - 2 * r - s}, {b + c - 2 * r});
  const Rational sign = parity_sign(a + b + c + r + s);
  for (int k = 0; k <= std::min(a, b); ++k) {
    if (!table.in_window(k)) continue;
    const Rational theta = sign * t1 *
                           factorial_ratio({a + b - 2 * k + 1}, {a + b - k + 1, a + b + c - r - s - k + 1}) *
                           theta_t2(a, b, c, r, s, k);
    if (!theta.is_zero()) table.coefficients.emplace(k, theta);
  }
  return table;
}

// --- omega --------------------------------------------------------------

namespace {

void require_omega_params(int a, int b, int r, int s, int d) {
  if (a < 0 || b < 0 || r < 0 || s < 0 || d < 0 || r > std::min(d, 2 * b) ||
      s > std::min(2 * a, 2 * b + d - 2 * r)) {
    throw RangeError("omega needs r <= min(d, 2b) and s <= min(2a, 2b+d-2r)");
  }
}

Rational omega_p1(int a, int b, int r, int s, int d) {
  return factorial_ratio({a, b, r, s, d - r, 2 * b - r, 2 * a - s, 2 * b + d - 2 * r - s},
                         {2 * a, 2 * b, 2 * b + d - 2 * r});
}

Rational omega_p2(int a, int b, int r, int s, int t, int d) {
  return factorial_ratio(
      {2 * t + 1, (a + b + t) / 2, a + b - t, a - b + t, b - a + t},
      {t, a + b + t + 1, a + b + d - r - s + t + 1, (a + b - t) / 2, (a - b + t) / 2, (b - a + t) / 2});
}

Rational omega_p3(int a, int b, int r, int s, int t, int d) {
  const long lo = std::max({a + b + t, 2 * b + d - r, 2 * a + 2 * b + d - 2 * r - s,
                            a + b + d - r - s + t});
  const long hi = std::min({a + b + d - r + t, 2 * a + 2 * b + d - r - s,
                            a + 3 * b + d - 2 * r - s + t});
  Rational sum;
  for (long z = std::max(lo, 0L); z <= hi; ++z) {
    Rational term = factorial_ratio(
        {z + 1}, {z - a - b - t, z - 2 * b - d + r, z - 2 * a - 2 * b - d + 2 * r + s,
                  z - a - b - d + r + s - t, a + b + d - r + t - z, 2 * a + 2 * b + d - r - s - z,
                  a + 3 * b + d - 2 * r - s + t - z});
    if (z % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

struct OmegaCache {
  std::shared_mutex mutex;
  std::map<std::array<int, 6>, Rational> values;
};

OmegaCache& omega_cache() {
  static OmegaCache cache;
  return cache;
}

}  // namespace

TRange omega_t_range(int a, int b, int r, int s, int d) {
  return {std::max(std::abs(a + b - r - s), std::abs(a - b)), std::min(a + b + d - r - s, a + b)};
}

Rational omega(int a, int b, int r, int s, int t, int d) {
  require_omega_params(a, b, r, s, d);
  const TRange range = omega_t_range(a, b, r, s, d);
  if (t < range.lo || t > range.hi || (t - a - b) % 2 != 0) return Rational(0);

  const std::array<int, 6> key{a, b, r, s, t, d};
  auto& cache = omega_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (const auto it = cache.values.find(key); it != cache.values.end()) return it->second;
  }
  const long sign_exponent = d + r + s + (a + b - t) / 2;
  const Rational value = parity_sign(sign_exponent) * omega_p1(a, b, r, s, d) *
                         omega_p2(a, b, r, s, t, d) * omega_p3(a, b, r, s, t, d);
  std::unique_lock lock(cache.mutex);
  cache.values.emplace(key, value);
  return value;
}

std::map<int, CompoundTerm> expand_compound(int a, int b, int r, int s, int d) {
  require_omega_params(a, b, r, s, d);
  const TRange range = omega_t_range(a, b, r, s, d);
  std::map<int, CompoundTerm> out;
  for (int t = range.lo; t <= range.hi; ++t) {
    const Rational w = omega(a, b, r, s, t, d);
    if (w.is_zero()) continue;
    out.emplace(t, CompoundTerm{w, (a + b - t) / 2, r + s - a - b + t});
  }
  return out;
}

Rational transition_G(int i, int j, int d) {
  const int n = d / 2;
  if (d < 0 || i < 0 || j < 0 || i > n || j > n) throw RangeError("G index out of range");
  if (j < i) return Rational(0);
  return factorial_ratio({d - 2 * i, 2 * d - 4 * j + 1, d - i - j},
                         {d - 2 * j, d - 2 * j, 2 * d - 2 * i - 2 * j + 1, j - i}) /
         Rational(pow2(2 * (j - i)));
}

}  // namespace quadinv
