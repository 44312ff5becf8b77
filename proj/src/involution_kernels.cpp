// OpenMP versions of the per-entry work behind SYS(d), enumeration and
// symbolic verification. Serial twins live in involution_kernels_ref.cpp.
#include <omp.h>

#include <exception>

#include "quadinv/involution.hpp"
#include "quadinv/recoupling.hpp"

namespace quadinv {

namespace {

// Runs body(k) for k in [0, count) across threads and rethrows the first
// exception on the calling thread.
template <class Body>
void parallel_for(long count, Body&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    try {
      body(k);
    } catch (...) {
#pragma omp critical(quadinv_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

QuadraticSystem build_sys(int d) {
  if (d < 0) throw RangeError("negative degree");
  const int n = d / 2;
  const long size = n + 1;
  std::vector<std::vector<std::vector<Rational>>> table(
      size, std::vector<std::vector<Rational>>(size, std::vector<Rational>(size)));
  parallel_for(size * size * size, [&](long k) {
    const int t = 2 * static_cast<int>(k / (size * size));
    const int i = static_cast<int>((k / size) % size);
    const int j = static_cast<int>(k % size);
    table[t / 2][i][j] = omega(d - 2 * j, d - 2 * i, d - 2 * i, d - 2 * j, t, d);
  });
  return QuadraticSystem(d, std::move(table));
}

std::vector<SignedInvolutor> enumerate_involutors(int d) {
  if (d < 0) throw RangeError("negative degree");
  const int n = d / 2;
  const long count = 1L << (n + 1);
  std::vector<SignedInvolutor> out(count, SignedInvolutor{SignSequence::gamma(d), Involutor{}});
  parallel_for(count, [&](long k) {
    std::vector<int> initial(n + 1);
    for (int i = 0; i <= n; ++i) initial[i] = ((k >> (n - i)) & 1L) ? -1 : 1;
    const SignSequence s = SignSequence::complete_from_initial(d, initial);
    out[k] = SignedInvolutor{s, z_from_sign(s)};
  });
  return out;
}

std::vector<bool> verify_symbolic_all(const std::vector<Involutor>& zs) {
  std::vector<char> flags(zs.size(), 0);
  parallel_for(static_cast<long>(zs.size()),
               [&](long k) { flags[k] = verify_involutor(zs[k], VerifyMode::Symbolic) ? 1 : 0; });
  return {flags.begin(), flags.end()};
}

}  // namespace quadinv
