#include "blocklab/decomp.hpp"

#include <sstream>
#include <stdexcept>

#include "blocklab/invariants.hpp"

namespace blocklab {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix to_rational(const std::vector<std::vector<long long>>& a) {
  RatMatrix r(a.size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = a[i][j];
  return r;
}

Rational rational_det(RatMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

RatMatrix rational_inverse(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("singular Cartan matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= piv;
      inv[c][k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

long long pow2(int e) { return 1LL << e; }

std::size_t case_dim(FusionCase c) { return c == FusionCase::aa ? 3 : c == FusionCase::ab ? 2 : 1; }

// 2^{n+m-1} C^{-1}, which is integral for all three cases
RatMatrix weight_matrix(const CartanMatrix& c, const GroupParams& p) {
  RatMatrix w = rational_inverse(to_rational(c.inner));
  Rational f = Rational(pow2(p.n + p.m - 1)) / c.scale;
  for (auto& row : w)
    for (auto& x : row) x *= f;
  return w;
}

Cyclotomic pair_contribution(const DecompRow& a, const DecompRow& b, const RatMatrix& w) {
  Cyclotomic acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (w[i][j] == 0 || b[j].is_zero()) continue;
      acc += (a[i] * b[j].conj()).scaled(w[i][j]);
    }
  }
  return acc;
}

bool row_is_zero(const DecompRow& r) {
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

DecompRow reference_row(FusionCase c) {
  DecompRow r(case_dim(c), Cyclotomic(0));
  r.back() = Cyclotomic(1);
  return r;
}

}  // namespace

BigInt CartanMatrix::determinant() const {
  Rational d = rational_det(to_rational(inner));
  for (std::size_t i = 0; i < dim(); ++i) d *= scale;
  return numerator(d);
}

bool CartanMatrix::positive_definite() const {
  RatMatrix a = to_rational(inner);
  for (std::size_t k = 1; k <= dim(); ++k) {
    RatMatrix minor(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[i][j];
    if (rational_det(minor) <= 0) return false;
  }
  return scale > 0;
}

bool CartanMatrix::symmetric() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (inner[i][j] != inner[j][i]) return false;
  return true;
}

CartanMatrix cartan_case(const GroupParams& params, FusionCase c) {
  if (!case_valid(c, params.n)) throw std::invalid_argument("case " + to_string(c) + " needs n >= 4");
  CartanMatrix cm;
  const long long q = pow2(params.n - 3);
  switch (c) {
    case FusionCase::ab:
      cm.scale = pow2(params.m);
      cm.inner = {{q + 1, 2}, {2, 4}};
      break;
    case FusionCase::aa:
      cm.scale = pow2(params.m);
      cm.inner = {{q + 1, 1, 1}, {1, 2, 0}, {1, 0, 2}};
      break;
    case FusionCase::bb:
      cm.scale = pow2(params.n + params.m - 1);
      cm.inner = {{1}};
      cm.degenerate = true;
      break;
  }
  return cm;
}

CycloMatrix contributions(const std::vector<DecompRow>& rows, const CartanMatrix& c, const GroupParams& params) {
  for (const auto& r : rows)
    if (r.size() != c.dim())
      throw std::invalid_argument("row length " + std::to_string(r.size()) + " does not match Cartan dimension " +
                                  std::to_string(c.dim()));
  RatMatrix w = weight_matrix(c, params);
  CycloMatrix out(rows.size(), std::vector<Cyclotomic>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) out[i][j] = pair_contribution(rows[i], rows[j], w);
  return out;
}

Cyclotomic contribution_closed_form_ab(const DecompRow& chi, const DecompRow& psi, int n) {
  if (chi.size() != 2 || psi.size() != 2) throw std::invalid_argument("ab rows have length 2");
  const Cyclotomic p1 = psi[0].conj(), p2 = psi[1].conj();
  return Cyclotomic(4) * chi[0] * p1 - Cyclotomic(2) * (chi[0] * p2 + chi[1] * p1) +
         Cyclotomic(pow2(n - 3) + 1) * chi[1] * p2;
}

Cyclotomic contribution_closed_form_aa(const DecompRow& chi, const DecompRow& psi, int n) {
  if (chi.size() != 3 || psi.size() != 3) throw std::invalid_argument("aa rows have length 3");
  const Cyclotomic p1 = psi[0].conj(), p2 = psi[1].conj(), p3 = psi[2].conj();
  return Cyclotomic(4) * chi[0] * p1 - Cyclotomic(2) * (chi[0] * p2 + chi[1] * p1 + chi[0] * p3 + chi[2] * p1) +
         (chi[1] * p3 + chi[2] * p2) + Cyclotomic(pow2(n - 2) + 1) * (chi[1] * p2 + chi[2] * p3);
}

HeightResult height_classify(const DecompRow& row, const GroupParams& params, FusionCase c) {
  if (c == FusionCase::bb) throw std::invalid_argument("height_classify needs case aa or ab");
  CartanMatrix cm = cartan_case(params, c);
  if (row.size() != cm.dim()) throw std::invalid_argument("row length does not match the case");
  if (row_is_zero(row)) throw std::invalid_argument("zero decomposition row");
  RatMatrix w = weight_matrix(cm, params);

  HeightResult r;
  r.m_diag = pair_contribution(row, row, w);
  r.diag = valuation(r.m_diag);
  if (r.diag.value == 0) {
    r.kind = HeightResult::Kind::height;
    r.height = 0;
    r.reason = "unit diagonal contribution";
    return r;
  }
  if (r.diag.value <= 1) {
    r.kind = HeightResult::Kind::contradiction;
    r.reason = "1 <= h < nu(m) <= 1 with nu(m) = " + r.diag.to_string();
    return r;
  }
  if (r.m_diag == Cyclotomic(4)) {
    r.kind = HeightResult::Kind::height;
    r.height = 1;
    r.reason = "diagonal contribution 4";
    return r;
  }
  Cyclotomic cross = pair_contribution(row, reference_row(c), w);
  r.cross = valuation(cross);
  if (r.cross.infinite || denominator(r.cross.value) != 1) {
    r.reason = "cross contribution has valuation " + r.cross.to_string();
    return r;
  }
  int h = static_cast<int>(numerator(r.cross.value));
  if (h == 0 || !(r.cross < r.diag)) {
    r.kind = HeightResult::Kind::contradiction;
    r.reason = "cross valuation " + r.cross.to_string() + " incompatible with diagonal valuation " + r.diag.to_string();
    return r;
  }
  r.kind = HeightResult::Kind::height;
  r.height = h;
  r.reason = "cross contribution against the height-zero reference row";
  return r;
}

namespace {

// Integer rows of one column pattern (1, 2 or 3 = (I), (II), (III)).
// Signs vary with the index j so that sign handling is exercised.
std::vector<std::vector<int>> pattern_rows(FusionCase c, int pattern, int n, long j) {
  const int q = 1 << (n - 2);
  auto e = [j](int i) { return ((j + i) % 2 == 0) ? 1 : -1; };
  std::vector<std::vector<int>> rows;
  const int alone = q - 3 + pattern;
  for (int i = 0; i < alone; ++i) rows.push_back(c == FusionCase::ab ? std::vector<int>{e(i), 0} : std::vector<int>{e(i), 0, 0});
  if (c == FusionCase::ab) {
    switch (pattern) {
      case 1:
        for (int i = 0; i < 4; ++i) rows.push_back({e(i), e(i)});
        for (int i = 0; i < 4; ++i) rows.push_back({0, e(i + 1)});
        break;
      case 2:
        rows.push_back({e(0), 2 * e(0)});
        rows.push_back({e(1), e(1)});
        rows.push_back({e(2), e(2)});
        rows.push_back({0, e(3)});
        rows.push_back({0, e(4)});
        break;
      default:
        rows.push_back({e(0), 2 * e(0)});
        rows.push_back({e(1), 2 * e(1)});
        break;
    }
  } else {
    switch (pattern) {
      case 1:
        rows.push_back({e(0), e(0), 0});
        rows.push_back({e(1), e(1), 0});
        rows.push_back({e(2), 0, e(2)});
        rows.push_back({e(3), 0, e(3)});
        rows.push_back({0, e(4), 0});
        rows.push_back({0, e(5), 0});
        rows.push_back({0, 0, e(6)});
        rows.push_back({0, 0, e(7)});
        break;
      case 2:
        rows.push_back({e(0), e(0), 0});
        rows.push_back({e(1), e(1), e(1)});
        rows.push_back({e(2), 0, e(2)});
        rows.push_back({0, e(3), -e(3)});
        rows.push_back({0, e(4), 0});
        rows.push_back({0, 0, e(5)});
        break;
      default:
        rows.push_back({e(0), e(0), e(0)});
        rows.push_back({e(1), e(1), e(1)});
        rows.push_back({0, e(2), -e(2)});
        rows.push_back({0, e(3), -e(3)});
        break;
    }
  }
  return rows;
}

}  // namespace

RowSystem synthetic_rows(const GroupParams& params, FusionCase c, int alpha, int beta) {
  if (c == FusionCase::bb || !case_valid(c, params.n)) throw std::invalid_argument("synthetic rows need case aa or ab");
  const long half = 1L << (params.m - 1);
  if (alpha < 0 || beta < 0 || alpha + beta > half) throw std::invalid_argument("alpha + beta exceeds 2^{m-1}");
  RowSystem sys{alpha, beta, static_cast<int>(half - alpha - beta), {}};
  const long conductor = 1L << params.m;
  for (long j = 0; j < half; ++j) {
    int pattern = j < alpha ? 1 : j < alpha + beta ? 2 : 3;
    Cyclotomic zj = Cyclotomic::root_of_unity(conductor, j);
    for (const auto& r : pattern_rows(c, pattern, params.n, j)) {
      DecompRow row;
      for (int v : r) row.push_back(Cyclotomic(v) * zj);
      sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

bool CensusReport::pass() const {
  if (points.empty() || max_k != target_k || !height1_constant_on_optimum) return false;
  for (const auto& p : points)
    if (!p.cartan_ok || !p.trace_ok || !p.classified || p.k != p.bound || p.k0 != 8LL * p.alpha + 4LL * p.beta)
      return false;
  return true;
}

std::string CensusReport::to_string() const {
  std::ostringstream os;
  os << "alpha beta gamma  k k0 k1 kn2 bound cartan trace classified\n";
  for (const auto& p : points)
    os << p.alpha << ' ' << p.beta << ' ' << p.gamma << "  " << p.k << ' ' << p.k0 << ' ' << p.k1 << ' ' << p.kn2
       << ' ' << p.bound << ' ' << p.cartan_ok << ' ' << p.trace_ok << ' ' << p.classified << '\n';
  os << "max k " << max_k << " (target " << target_k << "), height-1 count on optimum "
     << (height1_constant_on_optimum ? std::to_string(height1_on_optimum) : std::string("not constant")) << '\n';
  return os.str();
}

CensusReport census_check(const GroupParams& params, FusionCase c) {
  if (c == FusionCase::bb || !case_valid(c, params.n)) throw std::invalid_argument("census needs case aa or ab");
  const int n = params.n, m = params.m;
  const int half = 1 << (m - 1);
  CartanMatrix cm = cartan_case(params, c);
  RatMatrix w = weight_matrix(cm, params);
  const BlockInvariants target = theorem_formula(n, m, c);

  CensusReport rep;
  rep.target_k = target.k;
  for (int a = 0; a <= half; ++a) {
    for (int b = 0; a + b <= half; ++b) {
      if (8 * a + 4 * b > (1 << (m + 1))) continue;
      RowSystem sys = synthetic_rows(params, c, a, b);
      CensusPoint pt;
      pt.alpha = a;
      pt.beta = b;
      pt.gamma = sys.gamma;
      pt.k = static_cast<long long>(sys.rows.size());
      pt.bound = c == FusionCase::ab ? pow2(m + n - 3) + pow2(m) + 4LL * a + 2LL * b
                                     : pow2(n + m - 3) + pow2(m + 1) + 2LL * a + b;

      pt.cartan_ok = true;
      for (std::size_t i = 0; i < cm.dim(); ++i)
        for (std::size_t jj = 0; jj < cm.dim(); ++jj) {
          Cyclotomic s;
          for (const auto& r : sys.rows) s += r[i] * r[jj].conj();
          if (s != Cyclotomic(cm.entry(i, jj))) pt.cartan_ok = false;
        }

      Cyclotomic trace;
      pt.classified = true;
      for (const auto& r : sys.rows) {
        trace += pair_contribution(r, r, w);
        HeightResult h = height_classify(r, params, c);
        if (h.kind != HeightResult::Kind::height) {
          pt.classified = false;
          continue;
        }
        if (h.height == 0)
          ++pt.k0;
        else if (h.height == 1)
          ++pt.k1;
        else if (h.height == n - 2)
          ++pt.kn2;
        else
          pt.classified = false;
      }
      pt.trace_ok = trace == Cyclotomic(pow2(n + m - 1) * static_cast<long long>(cm.dim()));
      rep.max_k = std::max(rep.max_k, pt.k);
      rep.points.push_back(pt);
    }
  }

  // the optimum is the face 2 alpha + beta = 2^{m-1}
  bool first = true;
  rep.height1_constant_on_optimum = true;
  for (const auto& p : rep.points) {
    if (p.k != rep.max_k) continue;
    if (first) rep.height1_on_optimum = p.k1;
    else if (p.k1 != rep.height1_on_optimum) rep.height1_constant_on_optimum = false;
    first = false;
  }
  if (first || rep.height1_on_optimum != target.k1) rep.height1_constant_on_optimum = false;
  return rep;
}

std::vector<DecompRow> forbidden_ab_rows(const GroupParams& params, long j, long k, int eps) {
  const long conductor = 1L << params.m;
  const long half = conductor / 2;
  if (((j - k) % half + half) % half == 0) throw std::invalid_argument("forbidden shapes need j != k mod 2^{m-1}");
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
  Cyclotomic zj = Cyclotomic::root_of_unity(conductor, j).scaled(eps);
  Cyclotomic zk = Cyclotomic::root_of_unity(conductor, k).scaled(eps);
  return {{zj, zj + zk}, {zj, zj - zk}, {Cyclotomic(0), zj + zk}, {Cyclotomic(0), zj - zk}};
}

}  // namespace blocklab
