// Serial reference implementations; the parallel kernels must match these
// exactly.
#include "quadinv/involution.hpp"
#include "quadinv/recoupling.hpp"

namespace quadinv {

QuadraticSystem build_sys_ref(int d) {
  if (d < 0) throw RangeError("negative degree");
  const int n = d / 2;
  std::vector<std::vector<std::vector<Rational>>> table;
  for (int t = 0; t <= 2 * n; t += 2) {
    std::vector<std::vector<Rational>> slice;
    for (int i = 0; i <= n; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j <= n; ++j) row.push_back(omega(d - 2 * j, d - 2 * i, d - 2 * i, d - 2 * j, t, d));
      slice.push_back(std::move(row));
    }
    table.push_back(std::move(slice));
  }
  return QuadraticSystem(d, std::move(table));
}

std::vector<SignedInvolutor> enumerate_involutors_ref(int d) {
  if (d < 0) throw RangeError("negative degree");
  const int n = d / 2;
  std::vector<SignedInvolutor> out;
  // Odometer over s_0..s_n, last position fastest, '+' before '-'.
  std::vector<int> initial(n + 1, 1);
  while (true) {
    const SignSequence s = SignSequence::complete_from_initial(d, initial);
    out.push_back({s, z_from_sign(s)});
    int pos = n;
    while (pos >= 0 && initial[pos] == -1) initial[pos--] = 1;
    if (pos < 0) break;
    initial[pos] = -1;
  }
  return out;
}

std::vector<bool> verify_symbolic_all_ref(const std::vector<Involutor>& zs) {
  std::vector<bool> out;
  out.reserve(zs.size());
  for (const auto& z : zs) out.push_back(verify_involutor(z, VerifyMode::Symbolic));
  return out;
}

}  // namespace quadinv
