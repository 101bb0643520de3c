#pragma once

#include <string>
#include <vector>

#include "blocklab/cyclotomic.hpp"

namespace blocklab {

/// Dense integer matrix, row major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static IntMatrix identity(std::size_t n);

  BigInt& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (all >= 0).
struct SmithForm {
  IntMatrix D, U, V;
  std::size_t rank = 0;
  std::vector<BigInt> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Basis of {x in Z^cols : A x = 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& a);

/// Independent columns spanning the same lattice as the columns of `gens`.
IntMatrix lattice_basis(const IntMatrix& gens);

/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Finite abelian group as a list of invariant factors (each > 1).
struct FiniteAbelian {
  std::vector<BigInt> invariants;

  bool is_trivial() const { return invariants.empty(); }
  BigInt order() const;
  std::string to_string() const;
};

/// The quotient L / S where L is the lattice spanned by the columns of
/// `lattice` (full column rank) and S the span of `sub` (S must lie in L and
/// have finite index).
FiniteAbelian lattice_quotient(const IntMatrix& lattice, const IntMatrix& sub);

}  // namespace blocklab
