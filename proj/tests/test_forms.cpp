#include <doctest.h>

#include "quadinv/forms.hpp"
#include "support.hpp"

using namespace quadinv;
using quadinv::testing::random_form;
using quadinv::testing::random_rational;
using quadinv::testing::raw_form;
using quadinv::testing::uniform_int;

namespace {

Substitution<Rational> shear() { return {Rational(1), Rational(1), Rational(0), Rational(1)}; }

}  // namespace

TEST_CASE("cayley round trip") {
  for (int m = 0; m <= 8; ++m) {
    const RationalForm f = random_form(m);
    CHECK(RationalForm::from_cayley(f.cayley()) == f);
  }
  const RationalForm q = RationalForm::from_cayley({Rational(1), Rational(2), Rational(3)});
  CHECK(q[1] == Rational(4));
  CHECK_THROWS_AS(RationalForm(2, {Rational(1)}), ValidationError);
}

TEST_CASE("transvectant of the generic quadratic with itself") {
  const GenericQ g = generic_q();
  const MultiPoly q0 = MultiPoly::variable(g.vars, 0);
  const MultiPoly q1 = MultiPoly::variable(g.vars, 1);
  const MultiPoly q2 = MultiPoly::variable(g.vars, 2);
  const PolyForm qq = transvectant(g.q, g.q, 2);
  REQUIRE(qq.order() == 0);
  CHECK(qq[0] == (q0 * q2 - q1 * q1) * Rational(2));
  CHECK(g.delta == (q1 * q1 - q0 * q2) * Rational(4));
}

TEST_CASE("(Q, x1)_1 = -(q1 x1 + q2 x2)") {
  const GenericQ g = generic_q();
  const PolyForm x1 = lift(raw_form(1, {{0, Rational(1)}}), g.vars);
  const PolyForm r = transvectant(g.q, x1, 1);
  CHECK(r[0] == -MultiPoly::variable(g.vars, 1));
  CHECK(r[1] == -MultiPoly::variable(g.vars, 2));
}

TEST_CASE("zeroth transvectant is the product") {
  for (int k = 0; k < 10; ++k) {
    const RationalForm a = random_form(uniform_int(0, 5));
    const RationalForm b = random_form(uniform_int(0, 5));
    CHECK(transvectant(a, b, 0) == a * b);
  }
  CHECK_THROWS_AS(transvectant(random_form(2), random_form(3), 3), RangeError);
  CHECK_THROWS_AS(transvectant(random_form(2), random_form(3), -1), RangeError);
}

TEST_CASE("delta examples") {
  CHECK(delta(raw_form(2, {{1, Rational(1)}})) == Rational(1));
  CHECK(delta(raw_form(2, {{0, Rational(1)}})) == Rational(0));
  CHECK(delta(raw_form(2, {{0, Rational(1)}, {2, Rational(1)}})) == Rational(-4));
  CHECK_THROWS_AS(delta(random_form(3)), RangeError);
}

TEST_CASE("form_pow examples") {
  const RationalForm x1x2 = raw_form(2, {{1, Rational(1)}});
  CHECK(form_pow(x1x2, 2) == raw_form(4, {{2, Rational(1)}}));
  CHECK(form_pow(random_form(3), 0) == RationalForm::constant(Rational(1)));
  const RationalForm circle = raw_form(2, {{0, Rational(1)}, {2, Rational(1)}});
  CHECK(form_pow(circle, 2) == raw_form(4, {{0, Rational(1)}, {2, Rational(2)}, {4, Rational(1)}}));
}

TEST_CASE("unimodular_substitute examples") {
  const Substitution<Rational> id = {Rational(1), Rational(0), Rational(0), Rational(1)};
  const RationalForm x1_5 = raw_form(5, {{0, Rational(1)}});
  CHECK(unimodular_substitute(x1_5, id) == x1_5);

  // x1 -> x2, x2 -> -x1
  const Substitution<Rational> rot = {Rational(0), Rational(1), Rational(-1), Rational(0)};
  CHECK(unimodular_substitute(raw_form(2, {{1, Rational(1)}}), rot) == raw_form(2, {{1, Rational(-1)}}));

  CHECK(unimodular_substitute(raw_form(2, {{0, Rational(1)}}), shear()) ==
        raw_form(2, {{0, Rational(1)}, {1, Rational(2)}, {2, Rational(1)}}));

  const Substitution<Rational> bad = {Rational(2), Rational(0), Rational(0), Rational(1)};
  CHECK_THROWS_AS(unimodular_substitute(x1_5, bad), ValidationError);
}

TEST_CASE("bilinearity and homogeneity") {
  for (int k = 0; k < 20; ++k) {
    const int m = uniform_int(1, 5), n = uniform_int(1, 5);
    const int r = uniform_int(0, std::min(m, n));
    const RationalForm a = random_form(m), a2 = random_form(m), b = random_form(n), b2 = random_form(n);
    const Rational c = random_rational();
    CHECK(transvectant(a + a2, b, r) == transvectant(a, b, r) + transvectant(a2, b, r));
    CHECK(transvectant(a, b + b2, r) == transvectant(a, b, r) + transvectant(a, b2, r));
    CHECK(transvectant(a * c, b, r) == transvectant(a, b, r) * c);
    CHECK(transvectant(a, b * c, r) == transvectant(a, b, r) * c);
  }
}

TEST_CASE("symmetry (A,B)_r = (-1)^r (B,A)_r") {
  for (int k = 0; k < 20; ++k) {
    const int m = uniform_int(1, 6), n = uniform_int(1, 6);
    const int r = uniform_int(0, std::min(m, n));
    const RationalForm a = random_form(m), b = random_form(n);
    const Rational sign = (r % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(transvectant(a, b, r) == transvectant(b, a, r) * sign);
  }
  for (int m = 1; m <= 8; ++m) CHECK(transvectant(random_form(m), random_form(m), 1).order() == 2 * m - 2);
  for (int m = 1; m <= 8; ++m) {
    const RationalForm f = random_form(m);
    for (int r = 1; r <= m; r += 2) CHECK(transvectant(f, f, r).is_zero());
  }
}

TEST_CASE("shear equivariance") {
  for (int k = 0; k < 15; ++k) {
    const int m = uniform_int(1, 5), n = uniform_int(1, 5);
    const int r = uniform_int(0, std::min(m, n));
    const RationalForm a = random_form(m), b = random_form(n);
    CHECK(unimodular_substitute(transvectant(a, b, r), shear()) ==
          transvectant(unimodular_substitute(a, shear()), unimodular_substitute(b, shear()), r));
  }
}

TEST_CASE("identity (Q,(Q,l)_1)_1 = Delta/4 l") {
  const Variables v = make_variables({"q0", "q1", "q2", "l1", "l2"});
  const PolyForm q = generic_form(v, "q", 2);
  const PolyForm l(1, {MultiPoly::variable(v, "l1"), MultiPoly::variable(v, "l2")});
  CHECK(transvectant(q, transvectant(q, l, 1), 1) == l.scaled(delta(q) * Rational(1, 4)));
}

TEST_CASE("identity (Q,x1)_1^2 - q2 Q = (q1^2 - q0 q2) x1^2") {
  const GenericQ g = generic_q();
  const PolyForm x1 = lift(raw_form(1, {{0, Rational(1)}}), g.vars);
  const PolyForm lhs = form_pow(transvectant(g.q, x1, 1), 2) - g.q.scaled(MultiPoly::variable(g.vars, "q2"));
  const MultiPoly q0 = MultiPoly::variable(g.vars, 0), q1 = MultiPoly::variable(g.vars, 1),
                  q2 = MultiPoly::variable(g.vars, 2);
  const MultiPoly zero = MultiPoly::constant(g.vars, Rational(0));
  CHECK(lhs == PolyForm(2, {q1 * q1 - q0 * q2, zero, zero}));
}

TEST_CASE("quartic covariants and j-invariant") {
  const RationalForm fermat = raw_form(4, {{0, Rational(1)}, {4, Rational(1)}});
  const auto [a, b] = quartic_covariants(fermat);
  CHECK(a == Rational(2));
  CHECK(b == Rational(0));
  CHECK(j_invariant(fermat) == Rational(1));

  const RationalForm gt = raw_form(4, {{1, Rational(1)}, {3, Rational(1)}});
  CHECK(quartic_covariants(gt).a == Rational(-1, 2));
  CHECK(quartic_covariants(gt).b == Rational(0));
  CHECK(j_invariant(gt) == Rational(1));

  const auto zero = quartic_covariants(RationalForm(4));
  CHECK(zero.a == Rational(0));
  CHECK(zero.b == Rational(0));

  const RationalForm x13x2 = raw_form(4, {{1, Rational(1)}});
  CHECK(quartic_covariants(x13x2).a == Rational(0));
  CHECK(quartic_covariants(x13x2).b == Rational(0));
  CHECK_THROWS_AS(j_invariant(x13x2), DegenerateFormError);

  const RationalForm f = raw_form(4, {{0, Rational(1)}, {2, Rational(1)}, {4, Rational(1)}});
  CHECK(quartic_covariants(f).a == Rational(13, 6));
  CHECK(quartic_covariants(f).b == Rational(35, 36));
  CHECK(j_invariant(f) == Rational(2197, 972));

  CHECK_THROWS_AS(quartic_covariants(random_form(3)), RangeError);
}

TEST_CASE("j is SL2 invariant") {
  for (int k = 0; k < 10; ++k) {
    const RationalForm f = random_form(4);
    const auto [a, b] = quartic_covariants(f);
    if ((a.pow(3) - Rational(6) * b * b).is_zero()) continue;
    CHECK(j_invariant(unimodular_substitute(f, shear())) == j_invariant(f));
  }
}
