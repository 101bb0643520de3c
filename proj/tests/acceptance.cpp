// Acceptance run: one PASS/FAIL line per criterion. Time limits are part of
// each criterion and are pinned below.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "blocklab/blocks.hpp"
#include "blocklab/chartab.hpp"
#include "blocklab/decomp.hpp"
#include "blocklab/gluing.hpp"
#include "blocklab/invariants.hpp"
#include "blocklab/weights.hpp"

using namespace blocklab;

namespace {

constexpr double kLimitTheorem = 1.0;
constexpr double kLimitSubsections = 30.0;
constexpr double kLimitWitness = 60.0;  // per witness
constexpr double kLimitCensus = 1.0;
constexpr double kLimitOwc = 60.0;

const std::pair<int, int> kCalculusPairs[] = {{4, 2}, {5, 2}, {4, 3}};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class F>
void for_grid(int n0, int n1, int m0, int m1, F f) {
  for (int n = n0; n <= n1; ++n)
    for (int m = m0; m <= m1; ++m)
      for (FusionCase c : valid_cases(n)) f(n, m, c);
}

std::string cell(int n, int m, FusionCase c) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + "," + to_string(c) + ")";
}

void theorem_table(Outcome& o) {
  auto t0 = Clock::now();
  int cells = 0;
  for_grid(3, 6, 2, 4, [&](int n, int m, FusionCase c) {
    GroupParams p(n, m);
    BlockInvariants inv = theorem_main(p, c);
    long long sum = 0;
    for (const auto& [h, v] : inv.k_height) sum += v;
    o.require(sum == inv.k, "sum of k_h at " + cell(n, m, c));
    o.require(inv.k0 == (1LL << (m + 1)), "k0 at " + cell(n, m, c));
    o.require(inv.k <= p.order(), "k <= |D| at " + cell(n, m, c));
    ++cells;
  });
  double s = seconds_since(t0);
  o.require(s < kLimitTheorem, "time limit");
  o.detail << cells << " cells, " << s << " s";
}

void subsection_identity(Outcome& o) {
  auto t0 = Clock::now();
  int cells = 0;
  for_grid(3, 6, 2, 4, [&](int n, int m, FusionCase c) {
    SubsectionSum s = subsection_sum(GroupParams(n, m), c);
    o.require(s.ok(), "k-l != sum l at " + cell(n, m, c));
    ++cells;
  });
  double s = seconds_since(t0);
  o.require(s < kLimitSubsections, "time limit");
  o.detail << cells << " cells, " << s << " s";
}

void nilpotent_consistency(Outcome& o) {
  for (int n = 3; n <= 4; ++n)
    for (int m = 2; m <= 3; ++m) {
      GroupParams p(n, m);
      BlockInvariants want = theorem_main(p, FusionCase::bb);
      CharacterTable fam = family_table(p);
      CharacterTable dix = dixon_table(make_group(p));
      o.require(same_characters(fam, dix), "family and Dixon tables differ at n=" + std::to_string(n));
      for (const CharacterTable* t : {&fam, &dix}) {
        BlockInvariants got = principal_block_invariants(block_partition(*t), *t, p.order());
        o.require(got.k == want.k && got.k0 == want.k0 && got.k1 == want.k1 && got.kn2 == want.kn2 && got.l == want.l,
                  "invariants at " + cell(n, m, FusionCase::bb) + ": " + got.to_string());
      }
    }
  o.detail << "n in {3,4}, m in {2,3}, family and Dixon tables";
}

void witness(Outcome& o) {
  const long long expect[2][4] = {{14, 8, 6, 3}, {28, 16, 12, 3}};
  for (int m = 2; m <= 3; ++m) {
    auto t0 = Clock::now();
    WitnessReport w = run_witness("semidirect", GroupParams(3, m));
    double s = seconds_since(t0);
    const auto* e = expect[m - 2];
    const auto& inv = w.invariants;
    o.require(w.partition.blocks.size() == 1, "single block at m=" + std::to_string(m));
    o.require(inv.k == e[0] && inv.k0 == e[1] && inv.k1 == e[2] && inv.l == e[3],
              "invariants at m=" + std::to_string(m) + ": " + inv.to_string());
    o.require(s < kLimitWitness, "time limit at m=" + std::to_string(m));
    o.detail << "|G|=" << w.table.group_order() << " (" << inv.k << "," << inv.k0 << "," << inv.k1 << "," << inv.l
             << ") " << s << " s" << (m == 2 ? "; " : "");
  }
}

void automorphism_parity(Outcome& o) {
  for (int n = 3; n <= 5; ++n)
    for (int m = 2; m <= 3; ++m) {
      AutomorphismQuery q;
      q.order = 3;
      bool found = !automorphism_search(make_group(GroupParams(n, m)), q).empty();
      o.require(found == (n == 3), "order-3 automorphism at n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  o.detail << "n in {3,4,5}, m in {2,3}";
}

void f_class_counts(Outcome& o) {
  int cells = 0;
  for_grid(3, 6, 2, 4, [&](int n, int m, FusionCase c) {
    FusionSystem fs = build_fusion(GroupParams(n, m), c);
    auto cls = f_classes(fs);
    const std::size_t h = std::size_t{1} << (m - 1), q = std::size_t{1} << (n - 2);
    std::size_t want = c == FusionCase::aa ? (q + 1) * h
                     : c == FusionCase::ab ? (q + 1) * h + h
                                           : conjugacy_classes(*fs.group).size();
    o.require(cls.size() == want, "class count at " + cell(n, m, c));
    BlockInvariants inv = theorem_main(GroupParams(n, m), c);
    for (const auto& s : subsection_reps(fs, inv.l))
      for (const auto& k : cls)
        if (std::binary_search(k.begin(), k.end(), s.u))
          o.require(fully_normalized(fs, s.u, k), "<u> not fully normalized at " + cell(n, m, c));
    ++cells;
  });
  o.detail << cells << " cells";
}

void valuation_suite(Outcome& o) {
  for (int k = 2; k <= 6; ++k) {
    Valuation v = valuation(Cyclotomic(1) + Cyclotomic::root_of_unity(1L << k, 1));
    o.require(!v.infinite && v.value == Rational(1, 1LL << (k - 1)) && v.value > 0 && v.value < 1,
              "nu(1+zeta) at k=" + std::to_string(k));
  }
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> coef(-4, 4);
  int pairs = 0;
  while (pairs < 1000) {
    long n = 1L << (2 + pairs % 4);
    auto draw = [&] {
      std::map<long long, Rational> t;
      for (long e = 0; e < n / 2; ++e) t[e] = coef(rng);
      return Cyclotomic::from_exponents(n, t);
    };
    Cyclotomic a = draw(), b = draw();
    if (a.is_zero() || b.is_zero()) continue;
    Valuation va = valuation(a), vb = valuation(b);
    o.require(valuation(a * b) == va + vb, "multiplicativity");
    o.require(std::min(va, vb) <= valuation(a + b), "ultrametric inequality");
    ++pairs;
  }
  o.detail << "k=2..6, " << pairs << " random pairs";
}

void contribution_calculus(Outcome& o) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  int rows = 0;
  for (int t = 0; t < 1000; ++t) {
    auto [n, m] = kCalculusPairs[t % 3];
    GroupParams p(n, m);
    std::uniform_int_distribution<long> ex(0, (1L << m) - 1);
    auto entry = [&] {
      return Cyclotomic::root_of_unity(1L << m, ex(rng)).scaled(coef(rng)) +
             Cyclotomic::root_of_unity(1L << m, ex(rng)).scaled(coef(rng));
    };
    std::vector<DecompRow> r = {{entry(), entry()}, {entry(), entry()}};
    CycloMatrix mm = contributions(r, cartan_case(p, FusionCase::ab), p);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        o.require(mm[i][j] == contribution_closed_form_ab(r[i], r[j], n), "closed form mismatch");
    ++rows;
  }
  int legal = 0, forbidden = 0;
  for (auto [n, m] : kCalculusPairs) {
    GroupParams p(n, m);
    const long half = 1L << (m - 1);
    for (long j = 0; j < half; ++j)
      for (int eps : {1, -1}) {
        Cyclotomic z = Cyclotomic::root_of_unity(1L << m, j).scaled(eps);
        const std::pair<DecompRow, int> shapes[] = {
            {{Cyclotomic(0), z}, 0}, {{z, Cyclotomic(0)}, 1}, {{z, z}, 0}, {{z, z.scaled(2)}, n - 2}};
        for (const auto& [row, h] : shapes) {
          HeightResult r = height_classify(row, p, FusionCase::ab);
          o.require(r.kind == HeightResult::Kind::height && r.height == h, "legal shape height at " + cell(n, m, FusionCase::ab));
          ++legal;
        }
        for (long k = 0; k < half; ++k) {
          if (k == j) continue;
          for (const auto& row : forbidden_ab_rows(p, j, k, eps)) {
            HeightResult r = height_classify(row, p, FusionCase::ab);
            o.require(r.kind == HeightResult::Kind::contradiction, "forbidden shape accepted at " + cell(n, m, FusionCase::ab));
            ++forbidden;
          }
        }
      }
  }
  o.detail << rows << " random row pairs, " << legal << " legal rows, " << forbidden << " forbidden rows";
}

void census(Outcome& o) {
  auto t0 = Clock::now();
  for (auto [n, m] : kCalculusPairs)
    for (FusionCase c : {FusionCase::ab, FusionCase::aa}) {
      CensusReport r = census_check(GroupParams(n, m), c);
      const long long h = 1LL << (m - 1), q = 1LL << (n - 2);
      const long long want = c == FusionCase::ab ? h * (q + 4) : h * (q + 5);
      o.require(r.max_k == want, "max k at " + cell(n, m, c) + " is " + std::to_string(r.max_k));
      o.require(r.pass(), "census identities at " + cell(n, m, c));
      for (const auto& pt : r.points) o.require(pt.k0 <= (1LL << (m + 1)), "k0 budget");
    }
  double s = seconds_since(t0);
  o.require(s < kLimitCensus, "time limit");
  o.detail << s << " s";
}

void awc(Outcome& o) {
  int cells = 0;
  for_grid(3, 6, 2, 4, [&](int n, int m, FusionCase c) {
    long long w = alperin_weight_count(build_fusion(GroupParams(n, m), c));
    o.require(w == theorem_main(GroupParams(n, m), c).l, "weights != l at " + cell(n, m, c));
    ++cells;
  });
  o.detail << cells << " cells";
}

void owc(Outcome& o) {
  auto t0 = Clock::now();
  int cells = 0;
  for_grid(3, 5, 2, 3, [&](int n, int m, FusionCase c) {
    o.require(owc_check(GroupParams(n, m), c).pass(), "ledger at " + cell(n, m, c));
    ++cells;
  });
  for (int m = 2; m <= 3; ++m) {
    const long long h = 1LL << (m - 1);
    for (int n = 4; n <= 5; ++n) {
      FusionSystem fs = build_fusion(GroupParams(n, m), FusionCase::aa);
      for (const Subgroup* q : {&fs.q1, &fs.q2}) {
        WeightContext ctx(fs, *q);
        o.require(ctx.cell(m + 1).w == h, "w(Q,m+1)");
        o.require(ctx.cell(m + 2).w == 0, "w(Q,m+2)");
      }
    }
    FusionSystem fs3 = build_fusion(GroupParams(3, m), FusionCase::aa);
    WeightContext d(fs3, whole_group(*fs3.group));
    o.require(d.cell(m + 1).w == 3 * h, "w(D,m+1) at n=3");
    o.require(d.cell(m + 2).w == 4 * h, "w(D,m+2) at n=3");
  }
  double s = seconds_since(t0);
  o.require(s < kLimitOwc, "time limit");
  o.detail << cells << " cells, " << s << " s";
}

void gluing(Outcome& o) {
  int cells = 0;
  for_grid(3, 5, 2, 3, [&](int n, int m, FusionCase c) {
    GluingReport r = gluing_check(GroupParams(n, m), c);
    o.require(r.h0_a2.is_trivial() && r.h1_a1.is_trivial() && r.pass(), "obstructions at " + cell(n, m, c));
    ++cells;
  });
  for (int m = 2; m <= 3; ++m) {
    FusionSystem fs = build_fusion(GroupParams(3, m), FusionCase::aa);
    ChainCategory cc = chain_category(fs);
    o.require(cc.cat.objects == 3 && cc.cat.morphisms.size() == 5, "n=3 aa category shape");
    AValues a1 = a_values(fs, cc, 1);
    FiniteAbelian h1 = h1_category(cc.cat, a1.module);
    DerivationCount bf = h1_bruteforce(cc.cat, a1.module);
    o.require(bf.derivations == h1.order() * bf.inner, "solver disagrees with enumeration");
  }
  o.detail << cells << " cells";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"theorem table", theorem_table},
      {"subsection identity", subsection_identity},
      {"nilpotent consistency", nilpotent_consistency},
      {"witness end-to-end", witness},
      {"automorphism parity", automorphism_parity},
      {"F-class representatives", f_class_counts},
      {"valuation suite", valuation_suite},
      {"contribution calculus", contribution_calculus},
      {"census optimization", census},
      {"Alperin weight count", awc},
      {"ordinary weight ledger", owc},
      {"gluing obstructions", gluing},
  };
  int failures = 0, idx = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    ++idx;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << idx << ' ' << name << ": " << o.detail.str() << std::endl;
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
