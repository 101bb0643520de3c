#include "blocklab/blocks.hpp"
#include "blocklab/chartab.hpp"
#include "blocklab/invariants.hpp"
#include "doctest.h"

using namespace blocklab;

TEST_CASE("closed forms at sample points") {
  auto a = theorem_main(GroupParams(3, 2), FusionCase::aa);
  CHECK(a.k == 14);
  CHECK(a.k0 == 8);
  CHECK(a.k1 == 6);
  CHECK(a.l == 3);
  CHECK(a.e == 3);
  CHECK_FALSE(a.separate_kn2);
  auto b = theorem_main(GroupParams(4, 2), FusionCase::ab);
  CHECK(b.k == 16);
  CHECK(b.k1 == 6);
  CHECK(b.kn2 == 2);
  CHECK(b.l == 2);
  auto c = theorem_main(GroupParams(4, 2), FusionCase::bb);
  CHECK(c.k == 14);
  CHECK(c.l == 1);
  CHECK(theorem_main(GroupParams(6, 4), FusionCase::aa).k == 168);
  CHECK_THROWS_AS(theorem_main(GroupParams(3, 2), FusionCase::ab), std::invalid_argument);
}

TEST_CASE("invariant identities over the grid") {
  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m <= 4; ++m)
      for (auto c : valid_cases(n)) {
        auto inv = theorem_main(GroupParams(n, m), c);
        auto rep = conjecture_suite(inv, GroupParams(n, m));
        CHECK_MESSAGE(rep.pass(), rep.to_string());
        CHECK(inv.k0 == (1LL << (m + 1)));
      }
}

TEST_CASE("nilpotent case matches the character counts of D") {
  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m <= 4; ++m) {
      auto inv = theorem_main(GroupParams(n, m), FusionCase::bb);
      auto t = family_table(GroupParams(n, m));
      auto dd = defects_heights(t, t.group_order());
      CHECK(static_cast<long long>(t.size()) == inv.k);
      CHECK(static_cast<long long>(dd.k_height[0]) == inv.k0);
      CHECK(static_cast<long long>(dd.k_height[1]) == inv.k1);
    }
}

TEST_CASE("subsection sums") {
  auto s = subsection_sum(GroupParams(3, 2), FusionCase::aa);
  CHECK(s.k_minus_l == 11);
  CHECK(s.sum_l == 11);
  auto t = subsection_sum(GroupParams(4, 3), FusionCase::ab);
  CHECK(t.k_minus_l == 30);
  CHECK(t.ok());
  for (int n = 3; n <= 5; ++n)
    for (int m = 2; m <= 4; ++m)
      for (auto c : valid_cases(n)) CHECK(subsection_sum_check(GroupParams(n, m), c));
}

TEST_CASE("Alperin weight count equals l") {
  CHECK(alperin_weight_count(build_fusion(GroupParams(4, 2), FusionCase::aa)) == 3);
  CHECK(alperin_weight_count(build_fusion(GroupParams(3, 2), FusionCase::aa)) == 3);
  CHECK(alperin_weight_count(build_fusion(GroupParams(4, 2), FusionCase::ab)) == 2);
  CHECK(alperin_weight_count(build_fusion(GroupParams(5, 2), FusionCase::bb)) == 1);
}

TEST_CASE("m = 1 reproduces quaternion invariants") {
  for (int n = 3; n <= 6; ++n) {
    auto r = quaternion_formula_check(n);
    CHECK_MESSAGE(r.pass(), r.to_string());
  }
}
