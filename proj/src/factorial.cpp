#include "quadinv/factorial.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "quadinv/errors.hpp"

namespace quadinv {

namespace {

struct FactorialTable {
  std::shared_mutex mutex;
  std::deque<BigInt> values{BigInt(1)};
};

FactorialTable& table() {
  static FactorialTable t;
  return t;
}

}  // namespace

const BigInt& factorial(long n) {
  if (n < 0) throw RangeError("factorial of negative argument " + std::to_string(n));
  auto& t = table();
  const auto idx = static_cast<std::size_t>(n);
  {
    std::shared_lock lock(t.mutex);
    if (idx < t.values.size()) return t.values[idx];
  }
  std::unique_lock lock(t.mutex);
  while (t.values.size() <= idx) {
    const auto k = static_cast<unsigned long>(t.values.size());
    t.values.push_back(t.values.back() * k);
  }
  return t.values[idx];
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt falling_factorial(long n, long k) {
  if (k < 0) throw RangeError("falling factorial with negative length");
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r *= BigInt(n - i);
  return r;
}

Rational factorial_ratio(std::initializer_list<long> numerator,
                         std::initializer_list<long> denominator) {
  BigInt num = 1;
  BigInt den = 1;
  for (long a : numerator) {
    if (a < 0) throw InternalError("negative factorial argument in numerator");
    num *= factorial(a);
  }
  for (long a : denominator) {
    if (a < 0) throw InternalError("negative factorial argument in denominator");
    den *= factorial(a);
  }
  return Rational(num, den);
}

BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

}  // namespace quadinv
