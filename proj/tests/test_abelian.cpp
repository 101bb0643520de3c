#include <random>

#include "blocklab/abelian.hpp"
#include "doctest.h"

using namespace blocklab;

namespace {

IntMatrix from_rows(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  return m;
}

BigInt det3(const IntMatrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

TEST_CASE("smith form of random matrices") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int t = 0; t < 200; ++t) {
    IntMatrix a(3, 3);
    for (auto& v : a.data) v = entry(rng);
    SmithForm s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(abs(det3(s.U)) == 1);
    CHECK(abs(det3(s.V)) == 1);
    BigInt prod = 1;
    for (std::size_t i = 0; i < 3; ++i) {
      prod *= s.D(i, i);
      CHECK(s.D(i, i) >= 0);
      if (i + 1 < 3 && s.D(i, i) != 0) CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    }
    CHECK(prod == abs(det3(a)));
  }
}

TEST_CASE("rectangular smith form and kernels") {
  IntMatrix a = from_rows({{2, 4, 6, 8}, {1, 1, 1, 1}});
  SmithForm s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(s.rank == 2);
  IntMatrix k = integer_kernel(a);
  CHECK(k.cols == 2);
  IntMatrix zero(2, 2);
  CHECK(a * k == zero);
}

TEST_CASE("lattice quotients") {
  IntMatrix lat = IntMatrix::identity(2);
  CHECK(lattice_quotient(lat, from_rows({{2, 0}, {0, 3}})).invariants == std::vector<BigInt>{6});
  CHECK(lattice_quotient(lat, from_rows({{2, 0}, {0, 4}})).to_string() == "C2 x C4");
  CHECK(lattice_quotient(lat, from_rows({{1, 0}, {0, 1}})).is_trivial());
  // lattice 2Z inside Z, sub 6Z: quotient C3
  CHECK(lattice_quotient(from_rows({{2}}), from_rows({{6}})).invariants == std::vector<BigInt>{3});
  CHECK_THROWS(lattice_quotient(from_rows({{2}}), from_rows({{3}})));
  CHECK_THROWS(lattice_quotient(lat, from_rows({{1}, {0}})));
}
