#include "quadinv/golden.hpp"

#include <sstream>

#include "quadinv/involution.hpp"
#include "quadinv/loci.hpp"
#include "quadinv/recoupling.hpp"

namespace quadinv {

namespace {

std::string join(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

std::vector<Rational> parse_all(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(Rational::parse(s));
  return out;
}

GoldenItem compare(std::string name, const std::vector<Rational>& expected,
                   const std::vector<Rational>& computed) {
  return {std::move(name), join(expected), join(computed), expected == computed};
}

struct SysRow {
  int t;
  std::vector<std::pair<std::pair<int, int>, std::string>> terms;
};

// The printed SYS(6), one row per equation, z_i z_j collected with i <= j.
const std::vector<SysRow>& printed_sys6() {
  static const std::vector<SysRow> rows = {
      {2, {{{0, 0}, "-25/20328"}, {{0, 1}, "5/3234"}, {{1, 1}, "-1/2058"}, {{1, 2}, "22/735"},
           {{2, 2}, "11/210"}, {{2, 3}, "2"}}},
      {4, {{{0, 0}, "5/1331"}, {{0, 1}, "-15/847"}, {{0, 2}, "5/121"}, {{1, 1}, "-69/5390"},
           {{1, 2}, "-2/77"}, {{1, 3}, "2"}, {{2, 2}, "2/5"}}},
      {6, {{{0, 0}, "-5/2541"}, {{0, 1}, "4/165"}, {{0, 2}, "-7/33"}, {{0, 3}, "2"},
           {{1, 1}, "-1/35"}, {{1, 2}, "2/15"}}},
      {0, {{{0, 0}, "1/6468"}, {{1, 1}, "11/22050"}, {{2, 2}, "1/75"}, {{3, 3}, "1"}}},
  };
  return rows;
}

std::string render_terms(const std::vector<std::pair<std::pair<int, int>, Rational>>& terms) {
  std::ostringstream os;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [ij, c] = terms[k];
    os << (k ? " " : "") << c << "*z" << ij.first << "z" << ij.second;
  }
  return os.str();
}

}  // namespace

std::vector<GoldenItem> golden_suite() {
  std::vector<GoldenItem> items;

  const QuadraticSystem sys = build_sys(6);
  for (const auto& row : printed_sys6()) {
    std::vector<std::pair<std::pair<int, int>, Rational>> expected;
    for (const auto& [ij, c] : row.terms) expected.push_back({ij, Rational::parse(c)});
    const auto computed = sys.collected(row.t);
    items.push_back({"SYS(6) t=" + std::to_string(row.t), render_terms(expected),
                     render_terms(computed), expected == computed});
  }

  const std::vector<std::pair<std::string, std::vector<std::string>>> involutors = {
      {"+---+", {"4", "48/7", "-1/5"}},
      {"+-+-+", {"16", "24/7", "1/5"}},
      {"++-++", {"-12", "24/7", "3/5"}},
      {"+++-+++", {"40", "-180/11", "20/7", "5/7"}},
      {"++-+-++", {"-60", "-60/11", "30/7", "3/7"}},
  };
  for (const auto& [sign, z] : involutors) {
    items.push_back(compare("z(" + sign + ")", parse_all(z), z_from_sign(SignSequence::parse(sign)).z));
  }
  items.push_back(compare("geometric d=4", parse_all({"16", "24/7", "1/5"}), geometric_involutor(4).z));

  {
    std::vector<Rational> computed;
    for (const int t : {5, 7, 9}) computed.push_back(omega(5, 6, 2, 4, t, 5));
    items.push_back(compare("omega(5,6;2,4;t) d=5, t=5,7,9",
                            parse_all({"95/286286", "575/1123122", "95/9438"}), computed));
  }

  {
    const GenericQ g = generic_q();
    const auto q = [&](int i) { return MultiPoly::variable(g.vars, i); };
    const std::vector<MultiPoly> expected = {-(q(1) * q(2).pow(2)),
                                             (q(0).pow(3) - q(2).pow(3)) * Rational(1, 2),
                                             q(0).pow(2) * q(1)};
    RationalForm f(6);
    f[0] = Rational(1);
    f[6] = Rational(1);
    const std::vector<MultiPoly> computed = lambda_covariant(f).cayley();
    std::ostringstream e;
    std::ostringstream c;
    for (std::size_t i = 0; i < 3; ++i) {
      e << (i ? ", " : "") << expected[i].to_string();
      c << (i ? ", " : "") << computed[i].to_string();
    }
    items.push_back({"lambda(x1^6 + x2^6)", e.str(), c.str(), expected == computed});
  }

  {
    const GenericQ g = generic_q();
    const auto q = [&](int i) { return MultiPoly::variable(g.vars, i); };
    const MultiPoly expected = q(0).pow(3) + q(0) * q(1).pow(2) * Rational(4, 5) +
                               q(0).pow(2) * q(2) * Rational(1, 5) + q(2).pow(3);
    RationalForm f(6);
    f[0] = Rational(1);
    f[4] = Rational(1);
    f[6] = Rational(1);
    const MultiPoly computed = sextic_cubic_curve(f);
    items.push_back({"(Q^3,F)_6 for x1^6 + x2^6 + x1^2 x2^4", expected.to_string(),
                     computed.to_string(), expected == computed});
  }
  return items;
}

}  // namespace quadinv
