#pragma once

#include <string>
#include <vector>

namespace quadinv {

// One printed value recomputed from scratch.
struct GoldenItem {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

// SYS(6), the five sign-sequence involutors, the d=5 omega triple, lambda
// for x1^6 + x2^6 and the cubic of x1^6 + x2^6 + x1^2 x2^4.
std::vector<GoldenItem> golden_suite();

}  // namespace quadinv
