#include "blocklab/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "blocklab/errors.hpp"

namespace blocklab {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(D.rows, D.cols); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] -= q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t j = 0; j < m.cols; ++j) m(dst, j) -= q * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t i = 0; i < m.rows; ++i) m(i, dst) -= q * m(i, src);
}

BigInt floor_quotient(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{a, IntMatrix::identity(a.rows), IntMatrix::identity(a.cols), 0};
  IntMatrix& d = s.D;
  std::size_t limit = std::min(d.rows, d.cols);
  for (std::size_t t = 0; t < limit; ++t) {
    while (true) {
      // smallest nonzero entry of the remaining block becomes the pivot
      bool found = false;
      std::size_t pi = t, pj = t;
      BigInt best;
      for (std::size_t i = t; i < d.rows; ++i)
        for (std::size_t j = t; j < d.cols; ++j)
          if (d(i, j) != 0 && (!found || abs(d(i, j)) < best)) {
            found = true;
            best = abs(d(i, j));
            pi = i;
            pj = j;
          }
      if (!found) {
        s.rank = t;
        return s;
      }
      swap_rows(d, t, pi);
      swap_rows(s.U, t, pi);
      swap_cols(d, t, pj);
      swap_cols(s.V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = floor_quotient(d(i, t), d(t, t));
        add_row(d, i, t, q);
        add_row(s.U, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = floor_quotient(d(t, j), d(t, t));
        add_col(d, j, t, q);
        add_col(s.V, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and go again
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, BigInt(-1));
            add_row(s.U, t, i, BigInt(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < d.cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < s.U.cols; ++j) s.U(t, j) = -s.U(t, j);
    }
  }
  s.rank = limit;
  return s;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::size_t dim = a.cols - s.rank;
  IntMatrix k(a.cols, dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t i = 0; i < a.cols; ++i) k(i, c) = s.V(i, s.rank + c);
  return k;
}

BigInt FiniteAbelian::order() const {
  BigInt o = 1;
  for (const auto& v : invariants) o *= v;
  return o;
}

std::string FiniteAbelian::to_string() const {
  if (invariants.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < invariants.size(); ++i) out << (i ? " x " : "") << "C" << invariants[i];
  return out.str();
}

FiniteAbelian lattice_quotient(const IntMatrix& lattice, const IntMatrix& sub) {
  if (lattice.rows != sub.rows) throw std::invalid_argument("lattice_quotient: ambient dimensions differ");
  const std::size_t a = lattice.cols;
  if (a == 0) return {};
  // lattice = U^{-1} D V^{-1}, so coordinates of y are V D^{-1} (U y)[0..a)
  SmithForm s = smith_normal_form(lattice);
  if (s.rank != a) throw std::invalid_argument("lattice_quotient: lattice basis is not independent");
  IntMatrix uy = s.U * sub;
  IntMatrix scaled(a, sub.cols);
  for (std::size_t i = 0; i < uy.rows; ++i)
    for (std::size_t j = 0; j < sub.cols; ++j) {
      if (i >= a) {
        if (uy(i, j) != 0) throw std::invalid_argument("lattice_quotient: subgroup leaves the lattice span");
        continue;
      }
      if (uy(i, j) % s.D(i, i) != 0) throw std::invalid_argument("lattice_quotient: subgroup leaves the lattice");
      scaled(i, j) = uy(i, j) / s.D(i, i);
    }
  IntMatrix coords = s.V * scaled;
  if (!(lattice * coords == sub)) throw InternalError("lattice_quotient: coordinate solve failed");
  SmithForm q = smith_normal_form(coords);
  FiniteAbelian out;
  for (std::size_t i = 0; i < a; ++i) {
    BigInt v = i < q.rank ? q.D(i, i) : BigInt(0);
    if (v == 0) throw std::invalid_argument("lattice_quotient: quotient is infinite");
    if (v != 1) out.invariants.push_back(v);
  }
  return out;
}

}  // namespace blocklab

namespace blocklab {

IntMatrix lattice_basis(const IntMatrix& gens) {
  std::vector<std::vector<BigInt>> pool;
  for (std::size_t j = 0; j < gens.cols; ++j) {
    std::vector<BigInt> col(gens.rows);
    bool nonzero = false;
    for (std::size_t i = 0; i < gens.rows; ++i) {
      col[i] = gens(i, j);
      nonzero = nonzero || col[i] != 0;
    }
    if (nonzero) pool.push_back(std::move(col));
  }
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t r = 0; r < gens.rows && !pool.empty(); ++r) {
    // Euclid on row r across the pool until one column carries it
    for (;;) {
      std::size_t best = pool.size();
      for (std::size_t k = 0; k < pool.size(); ++k)
        if (pool[k][r] != 0 && (best == pool.size() || abs(pool[k][r]) < abs(pool[best][r]))) best = k;
      if (best == pool.size()) break;
      bool reduced = false;
      for (std::size_t k = 0; k < pool.size(); ++k) {
        if (k == best || pool[k][r] == 0) continue;
        BigInt q = pool[k][r] / pool[best][r];
        for (std::size_t i = 0; i < gens.rows; ++i) pool[k][i] -= q * pool[best][i];
        reduced = true;
      }
      if (!reduced) {
        basis.push_back(pool[best]);
        pool.erase(pool.begin() + static_cast<long>(best));
        break;
      }
    }
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [](const std::vector<BigInt>& c) {
                                for (const auto& v : c)
                                  if (v != 0) return false;
                                return true;
                              }),
               pool.end());
  }
  IntMatrix out(gens.rows, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < gens.rows; ++i) out(i, j) = basis[j][i];
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows != u.cols) throw std::invalid_argument("unimodular_inverse: matrix is not square");
  const std::size_t n = u.rows;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(u(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("unimodular_inverse: singular matrix");
    std::swap(a[p], a[c]);
    Rational piv = a[c][c];
    for (auto& v : a[c]) v /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (denominator(a[i][n + j]) != 1) throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
      out(i, j) = numerator(a[i][n + j]);
    }
  return out;
}

}  // namespace blocklab
