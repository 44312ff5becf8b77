#include <doctest.h>

#include <omp.h>

#include "quadinv/involution.hpp"

using namespace quadinv;

TEST_CASE("parallel SYS(d) matches the serial reference") {
  for (int d = 0; d <= 12; ++d) CHECK(build_sys(d) == build_sys_ref(d));
}

TEST_CASE("parallel enumeration matches the serial reference") {
  for (int d = 0; d <= 12; ++d) {
    const auto par = enumerate_involutors(d);
    const auto ref = enumerate_involutors_ref(d);
    REQUIRE(par.size() == ref.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
      CHECK(par[k].sign == ref[k].sign);
      CHECK(par[k].z == ref[k].z);
    }
  }
}

TEST_CASE("parallel symbolic verification matches the serial reference") {
  for (int d = 1; d <= 5; ++d) {
    std::vector<Involutor> zs;
    for (const auto& e : enumerate_involutors_ref(d)) {
      zs.push_back(e.z);
      Involutor broken = e.z;
      broken.z.front() += Rational(1);
      zs.push_back(broken);
    }
    const auto par = verify_symbolic_all(zs);
    CHECK(par == verify_symbolic_all_ref(zs));
    for (std::size_t k = 0; k < zs.size(); ++k) CHECK(par[k] == (k % 2 == 0));
  }
}

TEST_CASE("kernels are stable across thread counts") {
  const int saved = omp_get_max_threads();
  const QuadraticSystem ref = build_sys_ref(10);
  for (const int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    CHECK(build_sys(10) == ref);
  }
  omp_set_num_threads(saved);
}

TEST_CASE("kernel errors propagate to the caller") {
  CHECK_THROWS_AS(build_sys(-1), RangeError);
  CHECK_THROWS_AS(enumerate_involutors(-2), RangeError);
}
