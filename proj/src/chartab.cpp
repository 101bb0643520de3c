#include "blocklab/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "blocklab/errors.hpp"

namespace blocklab {

namespace {

using u64 = std::uint64_t;

u64 powmod(u64 b, u64 e, u64 q) {
  u64 r = 1;
  b %= q;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 q) { return powmod(a, q - 2, q); }

bool is_prime(u64 v) {
  if (v < 2) return false;
  for (u64 p = 2; p * p <= v; ++p)
    if (v % p == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 v) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= v; ++p)
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  if (v > 1) out.push_back(v);
  return out;
}

u64 primitive_root(u64 q) {
  auto ps = prime_factors(q - 1);
  for (u64 g = 2; g < q; ++g) {
    bool ok = true;
    for (u64 p : ps)
      if (powmod(g, (q - 1) / p, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw InternalError("no primitive root");
}

// Vectors of a subspace are kept reduced: at pivot position pivots[s] basis
// vector t has entry delta_{st}.
struct Subspace {
  std::vector<std::vector<u64>> basis;
  std::vector<std::size_t> pivots;
};

// Row reduce a set of vectors into Subspace form.
Subspace reduce_span(std::vector<std::vector<u64>> vecs, u64 q) {
  Subspace s;
  if (vecs.empty()) return s;
  std::size_t n = vecs[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < vecs.size(); ++col) {
    std::size_t piv = r;
    while (piv < vecs.size() && vecs[piv][col] == 0) ++piv;
    if (piv == vecs.size()) continue;
    std::swap(vecs[r], vecs[piv]);
    u64 inv = invmod(vecs[r][col], q);
    for (auto& v : vecs[r]) v = v * inv % q;
    for (std::size_t o = 0; o < vecs.size(); ++o) {
      if (o == r || vecs[o][col] == 0) continue;
      u64 f = vecs[o][col];
      for (std::size_t j = 0; j < n; ++j) vecs[o][j] = (vecs[o][j] + (q - f) * vecs[r][j]) % q;
    }
    s.pivots.push_back(col);
    ++r;
  }
  vecs.resize(r);
  s.basis = std::move(vecs);
  return s;
}

// Null space of a d x d matrix over F_q, as coefficient vectors.
std::vector<std::vector<u64>> null_space(std::vector<std::vector<u64>> a, u64 q) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    u64 inv = invmod(a[r][c], q);
    for (auto& v : a[r]) v = v * inv % q;
    for (std::size_t o = 0; o < rows; ++o) {
      if (o == r || a[o][c] == 0) continue;
      u64 f = a[o][c];
      for (std::size_t j = 0; j < cols; ++j) a[o][j] = (a[o][j] + (q - f) * a[r][j]) % q;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<u64>> out;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (q - a[i][free]) % q;
    out.push_back(std::move(v));
  }
  return out;
}

void fill_lookup(CharacterTable& t) { t.class_of = class_lookup(*t.group, t.classes); }

}  // namespace

long long CharacterTable::degree(std::size_t c) const {
  return static_cast<long long>(chars.at(c).at(0).rational_value());
}

std::vector<long long> CharacterTable::degrees() const {
  std::vector<long long> d;
  for (std::size_t c = 0; c < size(); ++c) d.push_back(degree(c));
  return d;
}

std::vector<std::size_t> CharacterTable::inverse_classes() const {
  std::vector<std::size_t> out(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) out[i] = class_of[group->inv(classes[i].representative)];
  return out;
}

bool CharacterTable::verify(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t k = classes.size();
  if (chars.size() != k) return fail("number of characters differs from number of classes");
  const Rational order(group->order());
  Rational degsq = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (chars[c].size() != k) return fail("character row has wrong length");
    Rational d = chars[c][0].rational_value();
    degsq += d * d;
  }
  if (degsq != order) return fail("sum of squared degrees differs from |G|");
  std::vector<std::vector<Cyclotomic>> conj(k, std::vector<Cyclotomic>(k));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < k; ++i) conj[c][i] = chars[c][i].conj();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic s;
      for (std::size_t i = 0; i < k; ++i) s += (chars[a][i] * conj[b][i]).scaled(Rational(classes[i].size()));
      if (s != Cyclotomic(a == b ? order : Rational(0)))
        return fail("row orthogonality fails for characters " + std::to_string(a) + ", " + std::to_string(b));
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic s;
      for (std::size_t c = 0; c < k; ++c) s += chars[c][i] * conj[c][j];
      Rational expect = i == j ? order / Rational(classes[i].size()) : Rational(0);
      if (s != Cyclotomic(expect))
        return fail("column orthogonality fails for classes " + std::to_string(i) + ", " + std::to_string(j));
    }
  return true;
}

void sort_characters(CharacterTable& t) {
  std::sort(t.chars.begin(), t.chars.end(), [](const auto& a, const auto& b) {
    Rational da = a[0].rational_value(), db = b[0].rational_value();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = Cyclotomic::compare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
}

bool same_characters(const CharacterTable& a, const CharacterTable& b) {
  if (a.classes.size() != b.classes.size() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.classes.size(); ++i)
    if (a.classes[i].elements != b.classes[i].elements) return false;
  CharacterTable x = a, y = b;
  sort_characters(x);
  sort_characters(y);
  return x.chars == y.chars;
}

CharacterTable family_table(const GroupParams& params) {
  CharacterTable t;
  t.group = make_group(params);
  t.classes = conjugacy_classes(*t.group);
  fill_lookup(t);
  const int n = params.n, m = params.m;
  const long xhalf = 1L << (n - 2);  // i ranges over [0, 2^{n-2})
  const long dihedral_x = 1L << (n - 1);
  const long zord = 1L << m;
  FamilyArithmetic arith(params);

  std::vector<FamilyElement> reps;
  for (const auto& c : t.classes) reps.push_back(arith.element(c.representative));

  auto z_part = [&](long r, long k) { return Cyclotomic::root_of_unity(zord, r * k); };
  // linear characters: theta_{ab} x lambda_r, r even
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (long r = 0; r < zord; r += 2) {
        std::vector<Cyclotomic> row;
        for (const auto& e : reps) {
          long sign = ((a * e.i + b * e.j) % 2 == 0) ? 1 : -1;
          row.push_back(z_part(r, e.k).scaled(Rational(sign)));
        }
        t.chars.push_back(std::move(row));
      }
  // degree two: chi_s x lambda_r, 1 <= s < 2^{n-2}, r = s mod 2
  for (long s = 1; s < xhalf; ++s)
    for (long r = s % 2; r < zord; r += 2) {
      std::vector<Cyclotomic> row;
      for (const auto& e : reps) {
        if (e.j == 1) {
          row.push_back(Cyclotomic(0));
          continue;
        }
        Cyclotomic v = Cyclotomic::root_of_unity(dihedral_x, s * e.i) + Cyclotomic::root_of_unity(dihedral_x, -s * e.i);
        row.push_back(v * z_part(r, e.k));
      }
      t.chars.push_back(std::move(row));
    }
  sort_characters(t);
  return t;
}

CharacterTable dixon_table(const GroupPtr& g) {
  if (g->order() > max_table_order())
    throw GuardError("dixon_table: group order " + std::to_string(g->order()) + " exceeds " +
                     std::to_string(max_table_order()) + " (set BLOCKLAB_MAX_ORDER to override)");
  CharacterTable t;
  t.group = g;
  t.classes = conjugacy_classes(*g);
  fill_lookup(t);
  const std::size_t k = t.classes.size();
  const u64 order = g->order();
  const u64 e = g->exponent();

  u64 q = 0;
  const double lower = 2.0 * std::sqrt(static_cast<double>(order));
  for (u64 c = e + 1; c < (u64{1} << 31); c += e)
    if (static_cast<double>(c) > lower && is_prime(c)) {
      q = c;
      break;
    }
  if (q == 0) throw GuardError("dixon_table: no prime q = 1 mod exponent below 2^31");

  // c[i][j][l] = #{a in K_i : a^{-1} g_l in K_j}
  std::vector<std::vector<std::vector<u64>>> c(k, std::vector<std::vector<u64>>(k, std::vector<u64>(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (Index a : t.classes[i].elements) ++c[i][t.class_of[g->mul(g->inv(a), t.classes[l].representative)]][l];

  // common eigenvectors of M_i (rows j, cols l) over F_q
  std::vector<Subspace> spaces;
  {
    std::vector<std::vector<u64>> id(k, std::vector<u64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    spaces.push_back(reduce_span(id, q));
  }
  for (std::size_t i = 1; i < k; ++i) {
    bool all_split = true;
    for (const auto& s : spaces)
      if (s.basis.size() > 1) all_split = false;
    if (all_split) break;
    std::vector<Subspace> next;
    for (auto& s : spaces) {
      const std::size_t d = s.basis.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // image M_i b_t, then coordinates through the pivots
      std::vector<std::vector<u64>> images(d, std::vector<u64>(k, 0));
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t j = 0; j < k; ++j) {
          u64 acc = 0;
          for (std::size_t l = 0; l < k; ++l) acc = (acc + c[i][j][l] * s.basis[b][l]) % q;
          images[b][j] = acc;
        }
      // R[s][b] = coordinate s of M_i b_b
      std::vector<std::vector<u64>> r(d, std::vector<u64>(d));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) r[a][b] = images[b][s.pivots[a]];
      std::size_t covered = 0;
      for (u64 lambda = 0; lambda < q && covered < d; ++lambda) {
        auto shifted = r;
        for (std::size_t a = 0; a < d; ++a) shifted[a][a] = (shifted[a][a] + q - lambda) % q;
        auto ker = null_space(shifted, q);
        if (ker.empty()) continue;
        covered += ker.size();
        std::vector<std::vector<u64>> vecs;
        for (const auto& coeffs : ker) {
          std::vector<u64> v(k, 0);
          for (std::size_t b = 0; b < d; ++b)
            for (std::size_t j = 0; j < k; ++j) v[j] = (v[j] + coeffs[b] * s.basis[b][j]) % q;
          vecs.push_back(std::move(v));
        }
        next.push_back(reduce_span(std::move(vecs), q));
      }
      if (covered != d) throw InternalError("dixon_table: class matrix does not split over F_q");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw InternalError("dixon_table: eigenspaces did not separate the characters");

  const auto inv_cls = t.inverse_classes();
  const u64 zeta = powmod(primitive_root(q), (q - 1) / e, q);
  std::vector<std::size_t> orders(k);
  for (std::size_t i = 0; i < k; ++i) orders[i] = g->element_order(t.classes[i].representative);
  // power maps: pow_class[i][t] = class of g_i^t
  std::vector<std::vector<std::size_t>> pow_class(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t s = 0; s < orders[i]; ++s) pow_class[i].push_back(t.class_of[g->pow(t.classes[i].representative, s)]);

  for (const auto& s : spaces) {
    // normalize omega(K_1) = 1 (class 0 is the identity)
    std::vector<u64> w = s.basis[0];
    if (w[0] == 0) throw InternalError("dixon_table: eigenvector vanishes at the identity class");
    u64 inv0 = invmod(w[0], q);
    for (auto& v : w) v = v * inv0 % q;
    u64 sum = 0;
    for (std::size_t i = 0; i < k; ++i)
      sum = (sum + w[i] * w[inv_cls[i]] % q * invmod(t.classes[i].size() % q, q)) % q;
    u64 degsq = order % q * invmod(sum, q) % q;
    u64 deg = 0;
    for (u64 d = 1; 2 * d < q; ++d)
      if (d * d % q == degsq) {
        deg = d;
        break;
      }
    if (deg == 0) throw InternalError("dixon_table: degree has no square root below q/2");
    std::vector<u64> val(k);
    for (std::size_t i = 0; i < k; ++i) val[i] = deg * w[i] % q * invmod(t.classes[i].size() % q, q) % q;

    std::vector<Cyclotomic> row;
    for (std::size_t i = 0; i < k; ++i) {
      const u64 o = orders[i];
      const u64 zo = powmod(zeta, e / o, q);
      const u64 inv_o = invmod(o % q, q);
      std::map<long long, Rational> terms;
      for (u64 a = 0; a < o; ++a) {
        u64 acc = 0;
        for (u64 s2 = 0; s2 < o; ++s2)
          acc = (acc + val[pow_class[i][s2]] * powmod(zo, (o - (a * s2) % o) % o, q)) % q;
        u64 mult = acc * inv_o % q;
        if (mult > deg) throw InternalError("dixon_table: eigenvalue multiplicity exceeds the degree");
        if (mult) terms[static_cast<long long>(a)] = Rational(static_cast<long long>(mult));
      }
      row.push_back(Cyclotomic::from_exponents(static_cast<long>(o), terms));
    }
    t.chars.push_back(std::move(row));
  }
  sort_characters(t);
  std::string why;
  if (!t.verify(&why)) throw InternalError("dixon_table: " + why);
  return t;
}

DefectData defects_heights(const CharacterTable& t, std::size_t sylow_order) {
  const std::size_t order = t.group_order();
  if (sylow_order == 0 || (sylow_order & (sylow_order - 1)) != 0 || order % sylow_order != 0)
    throw std::invalid_argument("defects_heights: defect group order must be a 2-power dividing |G|");
  const int full = nu2(static_cast<long long>(order));
  const int index = full - nu2(static_cast<long long>(sylow_order));
  DefectData d;
  for (std::size_t c = 0; c < t.size(); ++c) {
    int v = nu2(t.degree(c));
    d.defect.push_back(full - v);
    d.height.push_back(v - index);
    ++d.k_defect[full - v];
    ++d.k_height[v - index];
  }
  return d;
}

std::string table_tsv(const CharacterTable& t) {
  std::ostringstream out;
  out << "char";
  for (const auto& c : t.classes) out << '\t' << t.group->label(c.representative) << "(" << c.size() << ")";
  out << '\n';
  for (std::size_t c = 0; c < t.size(); ++c) {
    out << c;
    for (const auto& v : t.chars[c]) out << '\t' << v.to_string();
    out << '\n';
  }
  return out.str();
}

}  // namespace blocklab
