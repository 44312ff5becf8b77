#pragma once

#include <json.hpp>

#include "quadinv/binary_form.hpp"
#include "quadinv/recoupling.hpp"

namespace quadinv {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"variables": [...], "terms": [{"exponents": [...], "coeff": "p/q"}, ...]}
Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

// {"order": d, "cayley": [...]}; entries are "p/q" strings for rational
// forms and MultiPoly objects for symbolic ones.
Json to_json(const RationalForm& f);
Json to_json(const PolyForm& f);
RationalForm rational_form_from_json(const Json& j);
PolyForm poly_form_from_json(const Json& j);

Json to_json(const SqrtRational& x);

}  // namespace quadinv
