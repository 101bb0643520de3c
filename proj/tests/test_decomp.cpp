#include <random>

#include "blocklab/decomp.hpp"
#include "blocklab/invariants.hpp"
#include "doctest.h"

using namespace blocklab;

namespace {

Cyclotomic zeta(int m, long e) { return Cyclotomic::root_of_unity(1L << m, e); }

Cyclotomic random_entry(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<long> exp(0, (1L << m) - 1);
  Cyclotomic c;
  for (int t = 0; t < 2; ++t) c += Cyclotomic(coef(rng)) * zeta(m, exp(rng));
  return c;
}

}  // namespace

TEST_CASE("cartan matrices") {
  CartanMatrix ab = cartan_case(GroupParams(4, 2), FusionCase::ab);
  CHECK(ab.scale == 4);
  CHECK(ab.inner == std::vector<std::vector<long long>>{{3, 2}, {2, 4}});
  CHECK(ab.determinant() == BigInt(16 * 8));

  CartanMatrix aa = cartan_case(GroupParams(3, 2), FusionCase::aa);
  CHECK(aa.inner == std::vector<std::vector<long long>>{{2, 1, 1}, {1, 2, 0}, {1, 0, 2}});
  CHECK(aa.determinant() == BigInt(64 * 4));

  CartanMatrix bb = cartan_case(GroupParams(4, 3), FusionCase::bb);
  CHECK(bb.degenerate);
  CHECK(bb.entry(0, 0) == 64);

  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m <= 4; ++m)
      for (FusionCase c : valid_cases(n)) {
        CartanMatrix cm = cartan_case(GroupParams(n, m), c);
        CHECK(cm.symmetric());
        CHECK(cm.positive_definite());
        BigInt d = cm.determinant();
        while (d % 2 == 0) d /= 2;
        CHECK(d == 1);
      }
  CHECK_THROWS_AS(cartan_case(GroupParams(3, 2), FusionCase::ab), std::invalid_argument);
}

TEST_CASE("contributions match the closed forms") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 4 + trial % 3, m = 2 + trial % 2;
    GroupParams p(n, m);
    std::vector<DecompRow> rows = {{random_entry(rng, m), random_entry(rng, m)},
                                   {random_entry(rng, m), random_entry(rng, m)}};
    CycloMatrix mm = contributions(rows, cartan_case(p, FusionCase::ab), p);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) REQUIRE(mm[i][j] == contribution_closed_form_ab(rows[i], rows[j], n));
  }
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + trial % 3, m = 2 + trial % 2;
    GroupParams p(n, m);
    std::vector<DecompRow> rows(2);
    for (auto& r : rows)
      for (int t = 0; t < 3; ++t) r.push_back(random_entry(rng, m));
    CycloMatrix mm = contributions(rows, cartan_case(p, FusionCase::aa), p);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) REQUIRE(mm[i][j] == contribution_closed_form_aa(rows[i], rows[j], n));
  }
  GroupParams p(4, 2);
  CHECK_THROWS_AS(contributions({{Cyclotomic(1)}}, cartan_case(p, FusionCase::ab), p), std::invalid_argument);
}

TEST_CASE("sample contributions") {
  for (int n = 4; n <= 6; ++n)
    for (int m = 2; m <= 3; ++m) {
      GroupParams p(n, m);
      CartanMatrix ab = cartan_case(p, FusionCase::ab);
      for (long j = 0; j < (1L << (m - 1)); ++j) {
        CycloMatrix one = contributions({{zeta(m, j), Cyclotomic(0)}}, ab, p);
        CHECK(one[0][0] == Cyclotomic(4));
        for (int eps : {1, -1})
          for (int sgn : {1, -1})
            for (long k = 0; k < 3; ++k) {
              DecompRow chi = {zeta(m, k).scaled(eps), zeta(m, k).scaled(2 * eps)};
              DecompRow psi = {Cyclotomic(0), zeta(m, j).scaled(sgn)};
              Cyclotomic want = zeta(m, k - j).scaled(Rational(sgn * eps * (1LL << (n - 2))));
              CHECK(contributions({chi, psi}, ab, p)[0][1] == want);
            }
      }
    }
  for (int n = 3; n <= 5; ++n) {
    GroupParams p(n, 3);
    CartanMatrix aa = cartan_case(p, FusionCase::aa);
    for (int eps : {1, -1})
      for (long k = 0; k < 4; ++k)
        for (long j = 0; j < 4; ++j) {
          Cyclotomic e = zeta(3, k).scaled(eps);
          DecompRow chi = {e, e, e};
          DecompRow psi = {Cyclotomic(0), Cyclotomic(0), zeta(3, j)};
          CHECK(contributions({chi, psi}, aa, p)[0][1] == zeta(3, k - j).scaled(Rational(eps * (1LL << (n - 2)))));
        }
  }
}

TEST_CASE("height classification of legal shapes") {
  for (int n = 4; n <= 6; ++n)
    for (int m = 2; m <= 4; ++m) {
      GroupParams p(n, m);
      for (long j = 0; j < (1L << m); ++j) {
        Cyclotomic z = zeta(m, j);
        CHECK(height_classify({Cyclotomic(0), z}, p, FusionCase::ab).height == 0);
        CHECK(height_classify({z, Cyclotomic(0)}, p, FusionCase::ab).height == 1);
        CHECK(height_classify({z, z}, p, FusionCase::ab).height == 0);
        CHECK(height_classify({z, z.scaled(2)}, p, FusionCase::ab).height == n - 2);
        CHECK(height_classify({-z, z.scaled(-2)}, p, FusionCase::ab).height == n - 2);

        CHECK(height_classify({z, Cyclotomic(0), Cyclotomic(0)}, p, FusionCase::aa).height == 1);
        CHECK(height_classify({Cyclotomic(0), z, Cyclotomic(0)}, p, FusionCase::aa).height == 0);
        CHECK(height_classify({z, Cyclotomic(0), z}, p, FusionCase::aa).height == 0);
        CHECK(height_classify({z, z, z}, p, FusionCase::aa).height == n - 2);
        CHECK(height_classify({Cyclotomic(0), z, -z}, p, FusionCase::aa).height == n - 2);
      }
    }
  // n = 3: heights 1 and n-2 coincide
  GroupParams p3(3, 2);
  CHECK(height_classify({Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)}, p3, FusionCase::aa).height == 1);
  CHECK_THROWS_AS(height_classify({Cyclotomic(0), Cyclotomic(0)}, GroupParams(4, 2), FusionCase::ab),
                  std::invalid_argument);
}

TEST_CASE("height classification is invariant under roots of unity") {
  std::mt19937_64 rng(3);
  GroupParams p(5, 3);
  std::vector<DecompRow> shapes = {{Cyclotomic(0), Cyclotomic(1)}, {Cyclotomic(1), Cyclotomic(0)},
                                   {Cyclotomic(1), Cyclotomic(2)}, {Cyclotomic(1), Cyclotomic(1) + zeta(3, 1)}};
  for (const auto& s : shapes) {
    HeightResult base = height_classify(s, p, FusionCase::ab);
    for (long e = 0; e < 8; ++e) {
      DecompRow r;
      for (const auto& x : s) r.push_back(x * zeta(3, e));
      HeightResult t = height_classify(r, p, FusionCase::ab);
      CHECK(t.kind == base.kind);
      CHECK(t.height == base.height);
    }
  }
}

TEST_CASE("forbidden shapes are contradictions") {
  for (auto [n, m] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{4, 3}, std::pair{6, 4}}) {
    GroupParams p(n, m);
    const long half = 1L << (m - 1);
    for (long j = 0; j < half; ++j)
      for (long k = 0; k < half; ++k) {
        if (j == k) continue;
        for (int eps : {1, -1})
          for (const auto& row : forbidden_ab_rows(p, j, k, eps)) {
            HeightResult h = height_classify(row, p, FusionCase::ab);
            CHECK(h.kind == HeightResult::Kind::contradiction);
            CHECK(h.diag.value > 0);
            CHECK(h.diag.value <= 1);
          }
      }
  }
  // the explicit diagonal value for (1, 1 + zeta) at m = 2
  for (int n = 4; n <= 6; ++n) {
    GroupParams p(n, 2);
    Cyclotomic z = zeta(2, 1);
    HeightResult h = height_classify({Cyclotomic(1), Cyclotomic(1) + z}, p, FusionCase::ab);
    CHECK(h.m_diag == Cyclotomic(4) + Cyclotomic((1LL << (n - 3)) - 1) * (Cyclotomic(2) + z + z.conj()));
  }
  CHECK_THROWS_AS(forbidden_ab_rows(GroupParams(4, 2), 0, 2, 1), std::invalid_argument);
}

TEST_CASE("census") {
  CensusReport ab = census_check(GroupParams(4, 2), FusionCase::ab);
  CHECK(ab.max_k == 16);
  CHECK(ab.pass());
  CensusReport aa = census_check(GroupParams(4, 2), FusionCase::aa);
  CHECK(aa.max_k == 18);
  CHECK(aa.pass());

  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m <= 4; ++m)
      for (FusionCase c : {FusionCase::aa, FusionCase::ab}) {
        if (!case_valid(c, n)) continue;
        CensusReport r = census_check(GroupParams(n, m), c);
        INFO(n << ' ' << m << ' ' << to_string(c) << '\n' << r.to_string());
        CHECK(r.pass());
        CHECK(r.max_k == theorem_formula(n, m, c).k);
        for (const auto& pt : r.points) {
          CHECK(pt.k0 <= (1LL << (m + 1)));
          if (pt.k == r.max_k) {
            CHECK(pt.k0 == (1LL << (m + 1)));
            CHECK(pt.kn2 == theorem_formula(n, m, c).kn2);
          }
        }
      }
}

TEST_CASE("height-one count off the optimum varies") {
  CensusReport r = census_check(GroupParams(5, 3), FusionCase::ab);
  long long lo = 1LL << 40, hi = 0;
  for (const auto& p : r.points) {
    lo = std::min(lo, p.k1);
    hi = std::max(hi, p.k1);
  }
  CHECK(lo < hi);
  CHECK(r.height1_on_optimum == 4 * 7);
}
