#pragma once

// Direct symbolic checks of the recoupling expansions, shared by the unit
// and acceptance suites.

#include <array>
#include <vector>

#include "quadinv/forms.hpp"
#include "quadinv/loci.hpp"
#include "quadinv/recoupling.hpp"

namespace quadinv::testing {

// (A,(B,C)_r)_s == sum_k theta_k ((A,B)_k,C)_(r+s-k) with A, B, C generic.
inline bool theta_identity_holds(int a, int b, int c, int r, int s) {
  auto names = indexed_names("a", a + 1);
  for (auto& n : indexed_names("b", b + 1)) names.push_back(n);
  for (auto& n : indexed_names("c", c + 1)) names.push_back(n);
  const Variables v = make_variables(std::move(names));
  const PolyForm fa = generic_form(v, "a", a);
  const PolyForm fb = generic_form(v, "b", b);
  const PolyForm fc = generic_form(v, "c", c);
  const PolyForm lhs = transvectant(fa, transvectant(fb, fc, r), s);
  PolyForm rhs(lhs.order());
  for (const auto& [k, theta] : theta_coefficients(a, b, c, r, s).coefficients) {
    rhs += transvectant(transvectant(fa, fb, k), fc, r + s - k) * theta;
  }
  return lhs == rhs;
}

// (Q^a,(Q^b,F)_r)_s == sum_t omega Delta^((a+b-t)/2) (Q^t,F)_(r+s-a-b+t).
inline bool omega_identity_holds(int a, int b, int r, int s, int d) {
  const GenericQF g = generic_q_and_f(d);
  const PolyForm lhs = transvectant(form_pow(g.q, a), transvectant(form_pow(g.q, b), g.f, r), s);
  PolyForm rhs(lhs.order());
  for (const auto& [t, term] : expand_compound(a, b, r, s, d)) {
    rhs += transvectant(form_pow(g.q, t), g.f, term.transvectant_index)
               .scaled(g.delta.pow(static_cast<unsigned>(term.delta_power)) * term.coefficient);
  }
  return lhs == rhs;
}

// Every admissible (a,b,c,r,s) with orders bounded by max_order.
inline std::vector<std::array<int, 5>> theta_tuples(int max_order) {
  std::vector<std::array<int, 5>> out;
  for (int a = 0; a <= max_order; ++a)
    for (int b = 0; b <= max_order; ++b)
      for (int c = 0; c <= max_order; ++c)
        for (int r = 0; r <= std::min(b, c); ++r)
          for (int s = 0; s <= std::min(a, b + c - 2 * r); ++s) out.push_back({a, b, c, r, s});
  return out;
}

// Every admissible (a,b,r,s,d) with 1 <= a,b <= max_power, 1 <= d <= max_d.
inline std::vector<std::array<int, 5>> omega_tuples(int max_power, int max_d) {
  std::vector<std::array<int, 5>> out;
  for (int d = 1; d <= max_d; ++d)
    for (int a = 1; a <= max_power; ++a)
      for (int b = 1; b <= max_power; ++b)
        for (int r = 0; r <= std::min(d, 2 * b); ++r)
          for (int s = 0; s <= std::min(2 * a, 2 * b + d - 2 * r); ++s) out.push_back({a, b, r, s, d});
  return out;
}

// Centre-locus identities with Q and F fully symbolic.
struct LociIdentity {
  const char* name;
  bool (*holds)();
};

inline Involutor involutor(int d, std::initializer_list<const char*> z) {
  Involutor out{d, {}};
  for (const char* s : z) out.z.push_back(Rational::parse(s));
  return out;
}

inline std::vector<LociIdentity> loci_identities() {
  return {
      {"sigma(F) - Delta^2 F = -12 Q^2 (Q^2,F)_4 (z = (-12,24/7,3/5))",
       [] {
         const GenericQF g = generic_q_and_f(4);
         const PolyForm lhs = sigma_apply(g.q, involutor(4, {"-12", "24/7", "3/5"}), g.f) -
                              g.f.scaled(g.delta.pow(2));
         return lhs == form_pow(g.q, 2) * transvectant(form_pow(g.q, 2), g.f, 4) * Rational(-12);
       }},
      {"sigma(F) - Delta^3 F = 40 Q^3 (Q^3,F)_6 (z = (40,-180/11,20/7,5/7))",
       [] {
         const GenericQF g = generic_q_and_f(6);
         const PolyForm lhs = sigma_apply(g.q, involutor(6, {"40", "-180/11", "20/7", "5/7"}), g.f) -
                              g.f.scaled(g.delta.pow(3));
         return lhs == form_pow(g.q, 3) * transvectant(form_pow(g.q, 3), g.f, 6) * Rational(40);
       }},
      {"sigma_{Q,g}(F) - Delta^2 F = Q [16 (Q^3,F)_4 + 24/5 (Q,F)_2 Delta]",
       [] {
         const GenericQF g = generic_q_and_f(4);
         const PolyForm lhs = sigma_apply(g.q, geometric_involutor(4), g.f) - g.f.scaled(g.delta.pow(2));
         return lhs == g.q * alpha_geom_quartic(g.q, g.f);
       }},
      {"16 (Q^3,F)_4 + 24/5 (Q,F)_2 Delta = -32 (beta,Q)_1",
       [] {
         const GenericQF g = generic_q_and_f(4);
         return alpha_geom_quartic(g.q, g.f) == transvectant(beta_covariant(g.q, g.f), g.q, 1) * Rational(-32);
       }},
      {"(Q^4,F)_6 + 2/7 Delta (Q^2,F)_4 = -2 (lambda,Q)_1",
       [] {
         const GenericQF g = generic_q_and_f(6);
         return mu_sextic(g.q, g.f) == transvectant(lambda_covariant(g.q, g.f), g.q, 1) * Rational(-2);
       }},
      {"(beta,Q)_2 = (beta,(Q,F)_2)_2 = 0",
       [] {
         const GenericQF g = generic_q_and_f(4);
         const PolyForm b = beta_covariant(g.q, g.f);
         return transvectant(b, g.q, 2).is_zero() && transvectant(b, transvectant(g.q, g.f, 2), 2).is_zero();
       }},
      {"(lambda,Q)_2 = (lambda,(Q^2,F)_4)_2 = 0",
       [] {
         const GenericQF g = generic_q_and_f(6);
         const PolyForm l = lambda_covariant(g.q, g.f);
         return transvectant(l, g.q, 2).is_zero() &&
                transvectant(l, transvectant(form_pow(g.q, 2), g.f, 4), 2).is_zero();
       }},
      {"sigma(F) - Delta^3 F = -60 Q^2 mu (z = (-60,-60/11,30/7,3/7))",
       [] {
         const GenericQF g = generic_q_and_f(6);
         const PolyForm lhs = sigma_apply(g.q, involutor(6, {"-60", "-60/11", "30/7", "3/7"}), g.f) -
                              g.f.scaled(g.delta.pow(3));
         return lhs == form_pow(g.q, 2) * mu_sextic(g.q, g.f) * Rational(-60);
       }},
  };
}

}  // namespace quadinv::testing
