#include "quadinv/involution.hpp"

#include <sstream>

#include "quadinv/recoupling.hpp"

namespace quadinv {

// --- SignSequence ---------------------------------------------------------

SignSequence SignSequence::from_signs(std::vector<int> signs) {
  if (signs.empty()) throw ValidationError("sign sequence must be nonempty");
  const int d = static_cast<int>(signs.size()) - 1;
  const int parity = (d % 2 == 0) ? 1 : -1;
  for (int i = 0; i <= d; ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw ValidationError("signs must be +1 or -1");
  }
  for (int i = 0; i <= d; ++i) {
    if (signs[d - i] != parity * signs[i]) {
      throw ValidationError("sign sequence violates s_(d-i) = (-1)^d s_i at i=" +
                            std::to_string(i));
    }
  }
  return SignSequence(std::move(signs));
}

SignSequence SignSequence::parse(std::string_view text) {
  std::vector<int> signs;
  signs.reserve(text.size());
  for (const char c : text) {
    if (c == '+') {
      signs.push_back(1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else {
      throw ValidationError("sign sequences are strings of '+' and '-'");
    }
  }
  return from_signs(std::move(signs));
}

SignSequence SignSequence::complete_from_initial(int d, const std::vector<int>& initial) {
  if (d < 0) throw RangeError("negative degree");
  const int n = d / 2;
  if (static_cast<int>(initial.size()) != n + 1) {
    throw ValidationError("initial segment for d=" + std::to_string(d) + " needs " +
                          std::to_string(n + 1) + " signs");
  }
  const int parity = (d % 2 == 0) ? 1 : -1;
  std::vector<int> signs(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= n; ++i) {
    signs[i] = initial[i];
    signs[d - i] = parity * initial[i];
  }
  return from_signs(std::move(signs));
}

SignSequence SignSequence::gamma(int d) {
  if (d < 0) throw RangeError("negative degree");
  std::vector<int> signs(static_cast<std::size_t>(d) + 1);
  // Alternating, ending in '+'.
  for (int i = 0; i <= d; ++i) signs[i] = ((d - i) % 2 == 0) ? 1 : -1;
  return from_signs(std::move(signs));
}

SignSequence SignSequence::all_plus(int d) {
  if (d < 0) throw RangeError("negative degree");
  if (d % 2 != 0) throw ValidationError("(+,...,+) is a sign sequence only for even d");
  return from_signs(std::vector<int>(static_cast<std::size_t>(d) + 1, 1));
}

SignSequence SignSequence::negated() const {
  std::vector<int> out = signs_;
  for (auto& s : out) s = -s;
  return SignSequence(std::move(out));
}

std::string SignSequence::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (const int s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

// --- QuadraticSystem ------------------------------------------------------

QuadraticSystem::QuadraticSystem(int d, std::vector<std::vector<std::vector<Rational>>> table)
    : d_(d), table_(std::move(table)) {
  const std::size_t size = static_cast<std::size_t>(d / 2) + 1;
  if (table_.size() != size) throw InternalError("alpha table has the wrong number of t-slices");
  for (const auto& slice : table_) {
    if (slice.size() != size) throw InternalError("alpha table slice has the wrong shape");
    for (const auto& row : slice) {
      if (row.size() != size) throw InternalError("alpha table row has the wrong shape");
    }
  }
}

Rational QuadraticSystem::alpha(int t, int i, int j) const {
  const int n = half_degree();
  if (t < 0 || t % 2 != 0 || t > 2 * n || i < 0 || j < 0 || i > n || j > n) return Rational(0);
  return table_[t / 2][i][j];
}

Rational QuadraticSystem::evaluate(int t, const std::vector<Rational>& z) const {
  const int n = half_degree();
  if (static_cast<int>(z.size()) != n + 1) {
    throw RangeError("SYS(" + std::to_string(d_) + ") needs " + std::to_string(n + 1) +
                     " unknowns");
  }
  Rational sum;
  for (int i = 0; i <= n; ++i) {
    if (z[i].is_zero()) continue;
    for (int j = 0; j <= n; ++j) {
      const Rational& a = table_[t / 2][i][j];
      if (!a.is_zero()) sum += a * z[i] * z[j];
    }
  }
  return sum;
}

bool QuadraticSystem::is_satisfied_by(const std::vector<Rational>& z) const {
  if (static_cast<int>(z.size()) != half_degree() + 1) return false;
  if (!(evaluate(0, z) == Rational(1))) return false;
  for (int t = 2; t <= 2 * half_degree(); t += 2) {
    if (!evaluate(t, z).is_zero()) return false;
  }
  return true;
}

std::vector<std::pair<std::pair<int, int>, Rational>> QuadraticSystem::collected(int t) const {
  std::vector<std::pair<std::pair<int, int>, Rational>> out;
  const int n = half_degree();
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const Rational c = (i == j) ? alpha(t, i, i) : alpha(t, i, j) + alpha(t, j, i);
      if (!c.is_zero()) out.push_back({{i, j}, c});
    }
  }
  return out;
}

std::string QuadraticSystem::render_equation(int t) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, c] : collected(t)) {
    const auto [i, j] = ij;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    if (!mag.is_one()) os << mag << "*";
    if (i == j) {
      os << "z" << i << "^2";
    } else {
      os << "z" << i << "*z" << j;
    }
  }
  if (first) os << "0";
  os << " = " << (t == 0 ? "1" : "0");
  return os.str();
}

// --- closed forms ---------------------------------------------------------

Involutor geometric_involutor(int d) {
  if (d < 0) throw RangeError("negative degree");
  Involutor g{d, {}};
  for (int i = 0; i <= d / 2; ++i) {
    g.z.push_back(Rational(pow2(d - 2 * i)) *
                  factorial_ratio({d, d - i, 2 * d - 4 * i + 1},
                                  {i, d - 2 * i, d - 2 * i, 2 * d - 2 * i + 1}));
  }
  return g;
}

Involutor z_from_sign(const SignSequence& s) {
  const int d = s.degree();
  const int n = d / 2;
  Involutor out{d, {}};
  for (int i = 0; i <= n; ++i) {
    // 2^(1-2i), kept exact for i = 0.
    const Rational two_power = (i == 0) ? Rational(2) : Rational(BigInt(1), pow2(2 * i - 1));
    const Rational e1 = factorial_ratio({d, 2 * d - 4 * i + 1}, {d - 2 * i, d - 2 * i}) * two_power;
    Rational e2;
    for (int e = 0; e <= i; ++e) {
      for (int l = 0; l <= n; ++l) {
        const Rational m = (d == 2 * l) ? Rational(1, 2) : Rational(1);
        for (int p = 0; p <= l; ++p) {
          const int q = d - 2 * e - p;
          if (q < 0 || q > d - l) continue;
          Rational term = factorial_ratio({d - 2 * e, d - i - e},
                                          {2 * d - 2 * i - 2 * e + 1, i - e, p, q, l - p, d - l - q});
          term *= m;
          if ((q % 2 != 0) != (s[l] < 0)) term = -term;
          e2 += term;
        }
      }
    }
    out.z.push_back(e1 * e2);
  }
  return out;
}

// --- verification ---------------------------------------------------------

namespace {

bool symbolic_identity_holds(const Involutor& z) {
  const GenericQF g = generic_q_and_f(z.d);
  const PolyForm once = sigma_apply(g.q, z, g.f);
  const PolyForm twice = sigma_apply(g.q, z, once);
  return (twice - g.f.scaled(g.delta.pow(static_cast<unsigned>(z.d)))).is_zero();
}

}  // namespace

bool verify_involutor(const Involutor& z, VerifyMode mode) {
  if (z.d < 0 || static_cast<int>(z.z.size()) != z.d / 2 + 1) return false;
  if (mode == VerifyMode::Fast) return build_sys(z.d).is_satisfied_by(z.z);
  return symbolic_identity_holds(z);
}

VerifyReport verify_both(const Involutor& z) {
  return {verify_involutor(z, VerifyMode::Fast), verify_involutor(z, VerifyMode::Symbolic)};
}

// --- canonical forms ------------------------------------------------------

CanonicalBasis canonical_basis(const SignSequence& s) {
  CanonicalBasis b;
  for (int i = 0; i <= s.degree(); ++i) (s[i] > 0 ? b.plus : b.minus).push_back(i);
  return b;
}

bool canonical_check(const SignSequence& s, const RationalForm& f) {
  const int d = s.degree();
  if (f.order() != d) {
    throw RangeError("form of order " + std::to_string(f.order()) + " checked against a sign sequence for d=" +
                     std::to_string(d));
  }
  bool on_plus = true;
  bool on_minus = true;
  for (int i = 0; i <= d; ++i) {
    if (f[i].is_zero()) continue;
    if (s[i] > 0) {
      on_minus = false;
    } else {
      on_plus = false;
    }
  }
  return d % 2 == 0 ? on_plus : (on_plus || on_minus);
}

}  // namespace quadinv
