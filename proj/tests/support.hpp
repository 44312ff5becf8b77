#pragma once

#include <random>
#include <string>
#include <vector>

#include "quadinv/forms.hpp"

namespace quadinv::testing {

// Fixed seed so failures reproduce.
inline std::mt19937& rng() {
  static std::mt19937 g(0x5eed2026U);
  return g;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// p/q with |p| <= range, 1 <= q <= range.
inline Rational random_rational(int range = 6) {
  return Rational(uniform_int(-range, range), uniform_int(1, range));
}

inline RationalForm random_form(int order, int range = 6) {
  std::vector<Rational> c;
  for (int i = 0; i <= order; ++i) c.push_back(random_rational(range));
  return RationalForm(order, std::move(c));
}

inline MultiPoly random_poly(const Variables& vars, int terms, int max_exp) {
  MultiPoly p = MultiPoly::constant(vars, Rational(0));
  for (int k = 0; k < terms; ++k) {
    MultiPoly::Exponents e(vars->size());
    for (auto& x : e) x = static_cast<std::uint16_t>(uniform_int(0, max_exp));
    p += MultiPoly::monomial(vars, std::move(e), random_rational());
  }
  return p;
}

inline RationalForm form_from_cayley(const std::vector<std::string>& a) {
  std::vector<Rational> c;
  for (const auto& s : a) c.push_back(Rational::parse(s));
  return RationalForm::from_cayley(std::move(c));
}

// c * x1^(order-i) x2^i summed over the given (i, c) pairs.
inline RationalForm raw_form(int order, const std::vector<std::pair<int, Rational>>& terms) {
  RationalForm f(order);
  for (const auto& [i, c] : terms) f[i] += c;
  return f;
}

}  // namespace quadinv::testing
