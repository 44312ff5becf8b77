#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quadinv/errors.hpp"
#include "quadinv/factorial.hpp"
#include "quadinv/multipoly.hpp"
#include "quadinv/rational.hpp"

namespace quadinv {

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

// A binary form of fixed order m with coefficients in R (Rational or
// MultiPoly):
//
//   F = sum_i c_i x1^(m-i) x2^i
//
// Storage is the raw monomial coefficients c_i. The Cayley coefficients
// a_i = c_i / C(m, i), i.e. F = (a_0, ..., a_m | x1, x2)^m, are a view.
template <class R>
class BinaryForm {
 public:
  BinaryForm() : BinaryForm(0) {}
  explicit BinaryForm(int order) : coeffs_(checked_size(order), R(0)) {}
  BinaryForm(int order, std::vector<R> raw) : coeffs_(std::move(raw)) {
    if (coeffs_.size() != checked_size(order)) {
      throw ValidationError("form of order " + std::to_string(order) + " needs " +
                            std::to_string(order + 1) + " coefficients");
    }
  }

  static BinaryForm from_raw(std::vector<R> raw) {
    if (raw.empty()) throw ValidationError("form needs at least one coefficient");
    const int order = static_cast<int>(raw.size()) - 1;
    return BinaryForm(order, std::move(raw));
  }

  static BinaryForm from_cayley(std::vector<R> cayley) {
    if (cayley.empty()) throw ValidationError("form needs at least one coefficient");
    const int m = static_cast<int>(cayley.size()) - 1;
    for (int i = 0; i <= m; ++i) cayley[i] = cayley[i] * Rational(binomial(m, i));
    return BinaryForm(m, std::move(cayley));
  }

  static BinaryForm constant(R c) { return BinaryForm(0, {std::move(c)}); }

  // c * x1^(order-i) * x2^i
  static BinaryForm monomial(int order, int i, R c) {
    BinaryForm f(order);
    if (i < 0 || i > order) throw RangeError("monomial index out of range");
    f.coeffs_[i] = std::move(c);
    return f;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<R>& raw() const { return coeffs_; }
  const R& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  R& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

  R cayley(int i) const {
    return coeffs_.at(static_cast<std::size_t>(i)) * Rational(BigInt(1), binomial(order(), i));
  }
  std::vector<R> cayley() const {
    std::vector<R> out;
    out.reserve(coeffs_.size());
    for (int i = 0; i <= order(); ++i) out.push_back(cayley(i));
    return out;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!quadinv::is_zero(c)) return false;
    }
    return true;
  }

  BinaryForm& operator+=(const BinaryForm& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  BinaryForm& operator-=(const BinaryForm& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  BinaryForm operator-() const {
    BinaryForm r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  // Product of forms; orders add.
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm out(a.order() + b.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (quadinv::is_zero(a.coeffs_[i])) continue;
      for (int j = 0; j <= b.order(); ++j) {
        if (quadinv::is_zero(b.coeffs_[j])) continue;
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  BinaryForm scaled(const R& s) const {
    BinaryForm r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    return r;
  }
  friend BinaryForm operator*(BinaryForm a, const Rational& s) {
    for (auto& c : a.coeffs_) c = c * s;
    return a;
  }
  friend BinaryForm operator*(const Rational& s, BinaryForm a) { return std::move(a) * s; }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Applies `fn` coefficient-wise, e.g. to lift a rational form into a
  // polynomial ring or to specialise symbols.
  template <class Fn>
  auto map(Fn&& fn) const -> BinaryForm<decltype(fn(std::declval<const R&>()))> {
    using S = decltype(fn(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(fn(c));
    return BinaryForm<S>(order(), std::move(out));
  }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw RangeError("negative form order");
    return static_cast<std::size_t>(order) + 1;
  }
  void require_same_order(const BinaryForm& o) const {
    if (o.order() != order()) {
      throw RangeError("adding forms of orders " + std::to_string(order()) + " and " +
                       std::to_string(o.order()));
    }
  }

  std::vector<R> coeffs_;
};

using RationalForm = BinaryForm<Rational>;
using PolyForm = BinaryForm<MultiPoly>;

}  // namespace quadinv
