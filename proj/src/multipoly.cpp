#include "quadinv/multipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "quadinv/errors.hpp"

namespace quadinv {

Variables make_variables(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw ValidationError("empty variable name");
    if (!seen.insert(n).second) throw ValidationError("duplicate variable name '" + n + "'");
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::vector<std::string> indexed_names(std::string_view stem, int count) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(std::string(stem) + std::to_string(i));
  return out;
}

bool same_variables(const Variables& a, const Variables& b) {
  if (a == b) return true;
  const std::size_t na = a ? a->size() : 0;
  const std::size_t nb = b ? b->size() : 0;
  if (na == 0 && nb == 0) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

MultiPoly::Exponents zero_exponents(const Variables& vars) {
  return MultiPoly::Exponents(vars ? vars->size() : 0, 0);
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::constant(const Variables& vars, const Rational& c) {
  MultiPoly p;
  p.vars_ = vars;
  if (!c.is_zero()) p.terms_.emplace(zero_exponents(vars), c);
  return p;
}

MultiPoly MultiPoly::variable(const Variables& vars, std::string_view name) {
  if (vars) {
    const auto it = std::find(vars->begin(), vars->end(), name);
    if (it != vars->end()) return variable(vars, static_cast<std::size_t>(it - vars->begin()));
  }
  throw ValidationError("unknown variable '" + std::string(name) + "'");
}

MultiPoly MultiPoly::variable(const Variables& vars, std::size_t index) {
  if (!vars || index >= vars->size()) throw RangeError("variable index out of range");
  Exponents e = zero_exponents(vars);
  e[index] = 1;
  return monomial(vars, std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(const Variables& vars, Exponents exponents, const Rational& c) {
  if (exponents.size() != (vars ? vars->size() : 0)) {
    throw ValidationError("exponent vector length does not match variable count");
  }
  MultiPoly p;
  p.vars_ = vars;
  if (!c.is_zero()) p.terms_.emplace(std::move(exponents), c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Rational MultiPoly::constant_term() const { return coefficient(zero_exponents(vars_)); }

Rational MultiPoly::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (auto x : e) deg += x;
    best = std::max(best, deg);
  }
  return best;
}

MultiPoly MultiPoly::aligned_copy(const MultiPoly& o) {
  if (same_variables(vars_, o.vars_)) return o;
  if (o.is_constant()) return constant(vars_, o.constant_term());
  if (is_constant()) {
    *this = constant(o.vars_, constant_term());
    return o;
  }
  throw IncompatibleVariablesError("polynomials over different variable lists");
}

void MultiPoly::drop_zeros() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  const MultiPoly rhs = aligned_copy(o);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    MultiPoly z;
    z.vars_ = a.is_constant() ? b.vars_ : a.vars_;
    return z;
  }
  MultiPoly lhs = a;
  const MultiPoly rhs = lhs.aligned_copy(b);
  MultiPoly out;
  out.vars_ = lhs.vars_;
  const std::size_t n = lhs.variable_count();
  MultiPoly::Exponents e(n);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      auto [it, inserted] = out.terms_.try_emplace(e, ca);
      if (inserted) {
        it->second *= cb;
      } else {
        it->second += ca * cb;
      }
    }
  }
  out.drop_zeros();
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (same_variables(a.vars_, b.vars_)) return a.terms_ == b.terms_;
  if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
  throw IncompatibleVariablesError("comparing polynomials over different variable lists");
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, Rational(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
  const std::size_t n = variable_count();
  std::vector<const MultiPoly*> bound(n, nullptr);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = bindings.find((*vars_)[i]);
    if (it != bindings.end()) {
      if (!it->second.is_constant() && !same_variables(vars_, it->second.vars_)) {
        throw IncompatibleVariablesError("binding for '" + (*vars_)[i] +
                                         "' uses a different variable list");
      }
      bound[i] = &it->second;
    }
  }
  // powers[i][k] = binding_i^k, filled lazily
  std::vector<std::vector<MultiPoly>> powers(n);
  auto power_of = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(constant(vars_, Rational(1)));
    while (row.size() <= k) row.push_back(row.back() * *bound[i]);
    return row[k];
  };

  MultiPoly out = constant(vars_, Rational(0));
  for (const auto& [e, c] : terms_) {
    Exponents kept = e;
    MultiPoly factor = constant(vars_, Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
      if (bound[i] != nullptr && e[i] > 0) {
        factor = factor * power_of(i, e[i]);
        kept[i] = 0;
      }
    }
    out += monomial(vars_, std::move(kept), c) * factor;
  }
  return out;
}

MultiPoly MultiPoly::embed(const Variables& target) const {
  if (same_variables(vars_, target)) return *this;
  const std::size_t n = variable_count();
  std::vector<std::size_t> where(n, 0);
  std::vector<bool> used(n, false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < n; ++i) used[i] = used[i] || e[i] > 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) continue;
    const auto& name = (*vars_)[i];
    const auto it = target ? std::find(target->begin(), target->end(), name)
                           : std::vector<std::string>::const_iterator{};
    if (!target || it == target->end()) {
      throw IncompatibleVariablesError("cannot embed: symbol '" + name + "' missing in target");
    }
    where[i] = static_cast<std::size_t>(it - target->begin());
  }
  MultiPoly out;
  out.vars_ = target;
  for (const auto& [e, c] : terms_) {
    Exponents mapped = zero_exponents(target);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] > 0) mapped[where[i]] = e[i];
    }
    out.terms_[mapped] += c;
  }
  out.drop_zeros();
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag;
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << mag << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace quadinv
