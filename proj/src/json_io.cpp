#include "quadinv/json_io.hpp"

namespace quadinv {

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ValidationError("rationals are encoded as \"p/q\" strings or integers");
}

Json to_json(const MultiPoly& p) {
  Json vars = Json::array();
  if (p.variables()) {
    for (const auto& v : *p.variables()) vars.push_back(v);
  }
  Json terms = Json::array();
  for (const auto& [exps, c] : p.terms()) {
    Json e = Json::array();
    for (const auto x : exps) e.push_back(x);
    terms.push_back({{"coeff", c.to_string()}, {"exponents", std::move(e)}});
  }
  return {{"terms", std::move(terms)}, {"variables", std::move(vars)}};
}

MultiPoly poly_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return MultiPoly(rational_from_json(j));
  if (!j.is_object() || !j.contains("terms")) throw ValidationError("polynomial JSON needs \"terms\"");
  std::vector<std::string> names;
  if (j.contains("variables")) {
    for (const auto& v : j.at("variables")) {
      if (!v.is_string()) throw ValidationError("variable names must be strings");
      names.push_back(v.get<std::string>());
    }
  }
  const Variables vars = names.empty() ? Variables{} : make_variables(std::move(names));
  MultiPoly out;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coeff")) throw ValidationError("term needs \"coeff\"");
    const Rational c = rational_from_json(t.at("coeff"));
    MultiPoly::Exponents e;
    if (t.contains("exponents")) {
      for (const auto& x : t.at("exponents")) {
        if (!x.is_number_unsigned()) throw ValidationError("exponents must be nonnegative integers");
        e.push_back(x.get<std::uint16_t>());
      }
    }
    if (!vars) {
      if (!e.empty()) throw ValidationError("exponents given without variables");
      out += MultiPoly(c);
    } else {
      if (e.size() != vars->size()) throw ValidationError("exponent vector length mismatch");
      out += MultiPoly::monomial(vars, std::move(e), c);
    }
  }
  return out;
}

namespace {

template <class R, class Fn>
Json form_to_json(const BinaryForm<R>& f, Fn&& encode) {
  Json c = Json::array();
  for (const auto& a : f.cayley()) c.push_back(encode(a));
  return {{"cayley", std::move(c)}, {"order", f.order()}};
}

template <class R, class Fn>
BinaryForm<R> form_from_json(const Json& j, Fn&& decode) {
  if (!j.is_object() || !j.contains("cayley")) throw ValidationError("form JSON needs \"cayley\"");
  const Json& c = j.at("cayley");
  if (!c.is_array()) throw ValidationError("\"cayley\" must be an array");
  std::vector<R> coeffs;
  for (const auto& x : c) coeffs.push_back(decode(x));
  if (j.contains("order")) {
    const Json& o = j.at("order");
    if (!o.is_number_integer() || o.get<long>() != static_cast<long>(coeffs.size()) - 1) {
      throw ValidationError("form of order " + o.dump() + " needs order+1 Cayley coefficients");
    }
  }
  return BinaryForm<R>::from_cayley(std::move(coeffs));
}

}  // namespace

Json to_json(const RationalForm& f) {
  return form_to_json(f, [](const Rational& r) { return to_json(r); });
}

Json to_json(const PolyForm& f) {
  return form_to_json(f, [](const MultiPoly& p) { return to_json(p); });
}

RationalForm rational_form_from_json(const Json& j) {
  return form_from_json<Rational>(j, rational_from_json);
}

PolyForm poly_form_from_json(const Json& j) { return form_from_json<MultiPoly>(j, poly_from_json); }

Json to_json(const SqrtRational& x) {
  return {{"radicand", x.radicand.to_string()}, {"rational", x.rational_part.to_string()}};
}

}  // namespace quadinv
