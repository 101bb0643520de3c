#include "blocklab/fusion.hpp"
#include "doctest.h"

using namespace blocklab;

namespace {

std::size_t expected_f_classes(int n, int m, FusionCase c) {
  std::size_t h = std::size_t{1} << (m - 1), q = std::size_t{1} << (n - 2);
  switch (c) {
    case FusionCase::aa: return (q + 1) * h;
    case FusionCase::ab: return (q + 2) * h;
    case FusionCase::bb: return h * (q + 3);
  }
  return 0;
}

}  // namespace

TEST_CASE("case parsing and validity") {
  CHECK(parse_case("ba") == FusionCase::ab);
  CHECK_THROWS_AS(parse_case("cc"), std::invalid_argument);
  CHECK_FALSE(case_valid(FusionCase::ab, 3));
  CHECK_THROWS_AS(build_fusion(GroupParams(3, 2), FusionCase::ab), std::invalid_argument);
}

TEST_CASE("alphas per case") {
  CHECK(build_fusion(GroupParams(4, 2), FusionCase::aa).alphas.size() == 2);
  auto ab = build_fusion(GroupParams(4, 2), FusionCase::ab);
  REQUIRE(ab.alphas.size() == 1);
  CHECK(ab.alphas[0].domain == ab.q2);
  auto aa3 = build_fusion(GroupParams(3, 2), FusionCase::aa);
  REQUIRE(aa3.alphas.size() == 1);
  CHECK(aa3.alphas[0].domain.order() == 16);
  CHECK(aa3.inertial_index() == 3);
  CHECK(build_fusion(GroupParams(4, 2), FusionCase::bb).alphas.empty());
  for (const auto& a : build_fusion(GroupParams(5, 3), FusionCase::aa).alphas) {
    Index z = 1;  // index of z in the family layout
    CHECK(a.map[z] == z);
    for (Index e : a.domain.elements) CHECK(a.map[a.map[a.map[e]]] == e);
  }
}

TEST_CASE("F-class counts") {
  for (int n = 3; n <= 5; ++n)
    for (int m = 2; m <= 3; ++m)
      for (auto c : valid_cases(n)) {
        auto fs = build_fusion(GroupParams(n, m), c);
        auto cls = f_classes(fs);
        CHECK(cls.size() == expected_f_classes(n, m, c));
        std::size_t total = 0;
        for (const auto& k : cls) total += k.size();
        CHECK(total == fs.group->order());
        for (const auto& s : subsection_reps(fs, major_l_value(c))) {
          for (const auto& k : cls)
            if (std::find(k.begin(), k.end(), s.u) != k.end()) CHECK(fully_normalized(fs, s.u, k));
        }
      }
}

TEST_CASE("subsection l-values") {
  auto fs = build_fusion(GroupParams(4, 2), FusionCase::ab);
  std::size_t nonmajor = 0;
  for (const auto& s : subsection_reps(fs, 2))
    if (!s.major) {
      ++nonmajor;
      CHECK(s.l == 1);
    }
  CHECK(nonmajor == 8);
  auto aa = build_fusion(GroupParams(4, 3), FusionCase::aa);
  std::size_t major3 = 0;
  for (const auto& s : subsection_reps(aa, 3))
    if (s.major && s.u != 0 && s.l == 3) ++major3;
  CHECK(major3 == 7);
}

TEST_CASE("no F-conjugate of yz^j lies in Q2 in case ab") {
  auto fs = build_fusion(GroupParams(4, 2), FusionCase::ab);
  FamilyArithmetic f(fs.params);
  for (long j = 0; j < 4; ++j) {
    Index u = f.index(f.normalize(0, 1, j));
    for (const auto& cls : f_classes(fs))
      if (std::find(cls.begin(), cls.end(), u) != cls.end())
        for (Index v : cls) CHECK_FALSE(fs.q2.contains(v));
  }
}

TEST_CASE("F-centric subgroups") {
  auto fs = build_fusion(GroupParams(3, 2), FusionCase::aa);
  auto cen = f_centric_subgroups(fs);
  REQUIRE(cen.size() == 2);
  FamilyArithmetic f(fs.params);
  Subgroup xz = generate(*fs.group, {f.index(f.x()), f.index(f.z())});
  CHECK(std::find(cen[0].begin(), cen[0].end(), xz) != cen[0].end());
  CHECK(cen[0].size() == 3);
  CHECK(cen[1].front().order() == 16);

  for (auto c : {FusionCase::aa, FusionCase::ab, FusionCase::bb}) {
    auto fs4 = build_fusion(GroupParams(4, 2), c);
    bool q1 = false, q2 = false;
    for (const auto& cls : f_centric_subgroups(fs4))
      for (const auto& s : cls) {
        q1 = q1 || s == fs4.q1;
        q2 = q2 || s == fs4.q2;
      }
    CHECK(q1);
    CHECK(q2);
  }
}

TEST_CASE("Aut_F of chains") {
  auto fs = build_fusion(GroupParams(3, 2), FusionCase::aa);
  auto d = whole_group(*fs.group);
  auto a = aut_f(fs, {d});
  CHECK(a->order() == 12);
  CHECK(a->order() / derived_subgroup(*a).order() == 3);

  auto fs4 = build_fusion(GroupParams(4, 2), FusionCase::aa);
  auto a1 = aut_f(fs4, {fs4.q1});
  CHECK(a1->order() == 24);
  CHECK(a1->order() / derived_subgroup(*a1).order() == 2);

  FamilyArithmetic f(fs4.params);
  auto xz = generate(*fs4.group, {f.index(f.x()), f.index(f.z())});
  auto axz = aut_f(fs4, {xz});
  std::size_t o = axz->order();
  CHECK((o & (o - 1)) == 0);
}

TEST_CASE("fixed points of the S3 data") {
  auto fs = build_fusion(GroupParams(4, 2), FusionCase::aa);
  CHECK(fixed_point_check(fs, fs.q1).order() == 4);
  auto fs5 = build_fusion(GroupParams(5, 2), FusionCase::aa);
  CHECK(fixed_point_check(fs5, fs5.q2).order() == 4);
  CHECK_THROWS(fixed_point_check(build_fusion(GroupParams(4, 2), FusionCase::ab), fs.q1));
}

TEST_CASE("centric radical classes") {
  auto count = [](int n, int m, FusionCase c) { return centric_radical_classes(build_fusion(GroupParams(n, m), c)).size(); };
  CHECK(count(4, 2, FusionCase::aa) == 3);
  CHECK(count(4, 2, FusionCase::ab) == 2);
  CHECK(count(4, 2, FusionCase::bb) == 1);
  CHECK(count(3, 2, FusionCase::aa) == 1);
  CHECK(count(3, 2, FusionCase::bb) == 1);
}
