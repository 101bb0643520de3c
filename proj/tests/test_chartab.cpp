#include <algorithm>

#include "blocklab/chartab.hpp"
#include "blocklab/errors.hpp"
#include "doctest.h"

using namespace blocklab;

namespace {

std::map<long long, int> degree_multiset(const CharacterTable& t) {
  std::map<long long, int> out;
  for (auto d : t.degrees()) ++out[d];
  return out;
}

}  // namespace

TEST_CASE("family table counts") {
  auto t = family_table(GroupParams(3, 2));
  CHECK(t.size() == 10);
  CHECK(degree_multiset(t) == std::map<long long, int>{{1, 8}, {2, 2}});
  std::string why;
  CHECK_MESSAGE(t.verify(&why), why);

  auto t4 = family_table(GroupParams(4, 2));
  auto dd = defects_heights(t4, 32);
  CHECK(t4.size() == 14);
  CHECK(dd.k_height[0] == 8);
  CHECK(dd.k_height[1] == 6);
  CHECK(dd.k_defect[5] == 8);
  CHECK(dd.k_defect[4] == 6);
}

TEST_CASE("family table over the grid") {
  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m <= 4; ++m) {
      auto t = family_table(GroupParams(n, m));
      long long sq = 0;
      for (auto d : t.degrees()) sq += d * d;
      CHECK(sq == (1LL << (n + m - 1)));
      CHECK(t.size() == t.classes.size());
      auto dd = defects_heights(t, t.group_order());
      CHECK(dd.k_height[0] == (std::size_t{1} << (m + 1)));
      CHECK(dd.k_height[1] == (std::size_t{1} << (m - 1)) * ((std::size_t{1} << (n - 2)) - 1));
      if (n <= 4 && m <= 3) {
        std::string why;
        CHECK_MESSAGE(t.verify(&why), why);
      }
    }
}

TEST_CASE("degree-two characters of D(3,2) on z") {
  auto t = family_table(GroupParams(3, 2));
  Index z = family_index(*t.group, {0, 0, 1});
  std::size_t zc = t.class_of[z];
  for (std::size_t c = 0; c < t.size(); ++c)
    if (t.degree(c) == 2) {
      Cyclotomic v = t.chars[c][zc];
      bool ok = v == Cyclotomic::root_of_unity(4, 1).scaled(2) || v == Cyclotomic::root_of_unity(4, 3).scaled(2);
      CHECK(ok);
      Index x = family_index(*t.group, {1, 0, 0}), y = family_index(*t.group, {0, 1, 0});
      CHECK(t.chars[c][t.class_of[x]] == Cyclotomic(0));
      CHECK(t.chars[c][t.class_of[y]] == Cyclotomic(0));
    }
}

TEST_CASE("dixon agrees with the family construction") {
  for (int n = 3; n <= 4; ++n)
    for (int m = 2; m <= 3; ++m) {
      auto f = family_table(GroupParams(n, m));
      auto d = dixon_table(f.group);
      CHECK(same_characters(f, d));
    }
}

TEST_CASE("dixon on small groups") {
  auto c3 = dixon_table(cyclic_group(3));
  CHECK(c3.degrees() == std::vector<long long>{1, 1, 1});
  for (const auto& row : c3.chars)
    for (const auto& v : row) CHECK(3 % v.conductor() == 0);
  auto s3 = dixon_table(symmetric_group(3));
  CHECK(degree_multiset(s3) == std::map<long long, int>{{1, 2}, {2, 1}});
  auto s4 = dixon_table(symmetric_group(4));
  CHECK(degree_multiset(s4) == std::map<long long, int>{{1, 2}, {2, 1}, {3, 2}});
  auto a4 = dixon_table(permutation_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}));
  CHECK(degree_multiset(a4) == std::map<long long, int>{{1, 3}, {3, 1}});
}

TEST_CASE("dixon on D(3,2) x| C3") {
  auto g = make_group(GroupParams(3, 2));
  AutomorphismQuery q;
  q.order = 3;
  auto sd = semidirect_product(g, automorphism_search(g, q).front());
  auto t = dixon_table(sd);
  CHECK(t.size() == 14);
  CHECK(degree_multiset(t) == std::map<long long, int>{{1, 6}, {2, 6}, {3, 2}});
  auto dd = defects_heights(t, 16);
  CHECK(dd.k_height[0] == 8);
  CHECK(dd.k_height[1] == 6);
}

TEST_CASE("dixon respects the size guard") {
  CHECK_THROWS_AS(dixon_table(make_group(GroupParams(6, 6))), GuardError);
}
