#include "blocklab/weights.hpp"
#include "doctest.h"

using namespace blocklab;

TEST_CASE("weights at Q1 in case aa") {
  for (int n = 4; n <= 5; ++n)
    for (int m = 2; m <= 3; ++m) {
      FusionSystem fs = build_fusion(GroupParams(n, m), FusionCase::aa);
      WeightContext ctx(fs, fs.q1);
      CHECK(ctx.outer()->order() == 6);
      CHECK(ctx.chains().size() == 2);
      const long long h = 1LL << (m - 1);
      CHECK(ctx.cell(m + 1).w == h);
      CHECK(ctx.cell(m + 2).w == 0);
      for (int d = 0; d <= n + m - 1; ++d)
        if (d != m + 1 && d != m + 2) CHECK(ctx.cell(d).w == 0);
    }
}

TEST_CASE("weights at D for n = 3") {
  for (int m = 2; m <= 3; ++m) {
    FusionSystem fs = build_fusion(GroupParams(3, m), FusionCase::aa);
    Subgroup d = whole_group(*fs.group);
    WeightContext ctx(fs, d);
    CHECK(ctx.outer()->order() == 3);
    CHECK(ctx.chains().size() == 1);
    CHECK(ctx.cell(m + 1).w == 3 * (1LL << (m - 1)));
    CHECK(ctx.cell(m + 2).w == (1LL << (m + 1)));
  }
}

TEST_CASE("orbit structure at defect m+2") {
  for (int m = 2; m <= 3; ++m) {
    FusionSystem fs = build_fusion(GroupParams(4, m), FusionCase::aa);
    WeightContext ctx(fs, fs.q1);
    WeightCell cell = ctx.cell(m + 2);
    const std::size_t h = std::size_t{1} << (m - 1);
    for (const auto& ch : cell.chains) {
      if (ch.chain.size() == 1) {
        // trivial chain: I(sigma) = S3
        std::size_t full = 0;
        for (std::size_t s : ch.orbit_stabilizer_orders) full += s == 6;
        CHECK(full == h);
        for (std::size_t s : ch.orbit_stabilizer_orders) CHECK((s == 6 || s == 2));
        CHECK(ch.contribution == static_cast<long long>(h));
      } else {
        CHECK(ch.stabilizer_order == 2);
        std::size_t pairs = 0;
        for (std::size_t s : ch.orbit_sizes) pairs += s == 2;
        CHECK(pairs == h);
        CHECK(ch.contribution == -static_cast<long long>(h));
      }
    }
  }
}

TEST_CASE("ledger examples") {
  WeightLedger aa = owc_check(GroupParams(4, 2), FusionCase::aa);
  REQUIRE(aa.labels == std::vector<std::string>{"Q1", "Q2", "D"});
  CHECK(aa.w[0][3] == 2);
  CHECK(aa.w[1][3] == 2);
  CHECK(aa.target[3] == 4);
  CHECK(aa.pass());

  WeightLedger ab = owc_check(GroupParams(4, 2), FusionCase::ab);
  REQUIRE(ab.labels == std::vector<std::string>{"Q2", "D"});
  CHECK(ab.w[0][3] == 2);
  CHECK(ab.pass());

  WeightLedger bb = owc_check(GroupParams(5, 3), FusionCase::bb);
  REQUIRE(bb.labels == std::vector<std::string>{"D"});
  FusionSystem fs = build_fusion(GroupParams(5, 3), FusionCase::bb);
  CharacterTable t = family_table(GroupParams(5, 3));
  std::vector<long long> kd(bb.target.size(), 0);
  for (std::size_t c = 0; c < t.size(); ++c) ++kd[7 - nu2(t.degree(c))];
  CHECK(bb.w[0] == kd);
  CHECK(bb.pass());
}

TEST_CASE("ledger over the grid and alpha choices") {
  for (int n = 3; n <= 5; ++n)
    for (int m = 2; m <= 3; ++m)
      for (FusionCase c : valid_cases(n)) {
        WeightLedger a = owc_check(GroupParams(n, m), c, 0);
        INFO(n << ' ' << m << ' ' << to_string(c) << '\n' << a.to_string());
        CHECK(a.pass());
        if (c != FusionCase::bb) {
          WeightLedger b = owc_check(GroupParams(n, m), c, 1);
          CHECK(a.w == b.w);
        }
      }
}
