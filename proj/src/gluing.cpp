#include "blocklab/gluing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "blocklab/errors.hpp"

namespace blocklab {

namespace {

// Canonical coordinates of Z^s / Rel from the Smith form of the relations.
struct Coords {
  IntMatrix u, uinv;
  std::vector<BigInt> d;

  explicit Coords(const AbelianValue& v) {
    SmithForm s = smith_normal_form(v.relations);
    const std::size_t n = v.generators();
    if (s.rank != n) throw std::invalid_argument("AbelianValue: relations do not have full rank");
    u = s.U;
    uinv = unimodular_inverse(s.U);
    for (std::size_t i = 0; i < n; ++i) d.push_back(s.D(i, i));
  }

  std::vector<BigInt> key(const std::vector<BigInt>& x) const {
    std::vector<BigInt> y(d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < d.size(); ++j) acc += u(i, j) * x[j];
      acc %= d[i];
      if (acc < 0) acc += d[i];
      y[i] = acc;
    }
    return y;
  }

  bool is_zero(const std::vector<BigInt>& x) const {
    for (const auto& v : key(x))
      if (v != 0) return false;
    return true;
  }

  std::vector<std::vector<BigInt>> elements() const {
    std::vector<std::vector<BigInt>> out;
    std::vector<BigInt> y(d.size(), 0);
    for (;;) {
      std::vector<BigInt> x(d.size(), 0);
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) x[i] += uinv(i, j) * y[j];
      out.push_back(std::move(x));
      std::size_t k = 0;
      while (k < d.size()) {
        if (++y[k] < d[k]) break;
        y[k] = 0;
        ++k;
      }
      if (k == d.size()) break;
    }
    return out;
  }
};

std::vector<BigInt> mat_apply(const IntMatrix& m, const std::vector<BigInt>& x) {
  std::vector<BigInt> y(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) y[i] += m(i, j) * x[j];
  return y;
}

std::vector<BigInt> vec_sub(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

std::vector<BigInt> unit(std::size_t n, std::size_t i) {
  std::vector<BigInt> e(n, 0);
  e[i] = 1;
  return e;
}

// Columns of `gens` (first `keep` rows) of the kernel of [phi | -rel].
IntMatrix constrained_lattice(const IntMatrix& phi, const IntMatrix& rel) {
  IntMatrix a(phi.rows, phi.cols + rel.cols);
  for (std::size_t i = 0; i < phi.rows; ++i) {
    for (std::size_t j = 0; j < phi.cols; ++j) a(i, j) = phi(i, j);
    for (std::size_t j = 0; j < rel.cols; ++j) a(i, phi.cols + j) = -rel(i, j);
  }
  IntMatrix k = integer_kernel(a);
  IntMatrix proj(phi.cols, k.cols);
  for (std::size_t i = 0; i < phi.cols; ++i)
    for (std::size_t j = 0; j < k.cols; ++j) proj(i, j) = k(i, j);
  return lattice_basis(proj);
}

IntMatrix block_relations(const std::vector<const AbelianValue*>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (auto* b : blocks) {
    rows += b->relations.rows;
    cols += b->relations.cols;
  }
  IntMatrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (auto* b : blocks) {
    for (std::size_t i = 0; i < b->relations.rows; ++i)
      for (std::size_t j = 0; j < b->relations.cols; ++j) out(r0 + i, c0 + j) = b->relations(i, j);
    r0 += b->relations.rows;
    c0 += b->relations.cols;
  }
  return out;
}

void add_block(IntMatrix& m, std::size_t r0, std::size_t c0, const IntMatrix& b, long sign) {
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) m(r0 + i, c0 + j) += sign * b(i, j);
}

void add_identity(IntMatrix& m, std::size_t r0, std::size_t c0, std::size_t n, long sign) {
  for (std::size_t i = 0; i < n; ++i) m(r0 + i, c0 + i) += sign;
}

}  // namespace

bool Category::verify(std::string* why) const {
  auto fail = [why](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (identities.size() != objects) return fail("identity count");
  for (std::size_t a = 0; a < morphisms.size(); ++a) {
    const auto& m = morphisms[a];
    if (compose[identities[m.cod]][a] != static_cast<long>(a)) return fail("left identity");
    if (compose[a][identities[m.dom]] != static_cast<long>(a)) return fail("right identity");
    for (std::size_t b = 0; b < morphisms.size(); ++b) {
      long ba = compose[b][a];
      bool composable = morphisms[b].dom == m.cod;
      if ((ba >= 0) != composable) return fail("composability");
      if (ba < 0) continue;
      const auto& c = morphisms[static_cast<std::size_t>(ba)];
      if (c.dom != m.dom || c.cod != morphisms[b].cod) return fail("composite endpoints");
      for (std::size_t g = 0; g < morphisms.size(); ++g) {
        if (morphisms[g].dom != morphisms[b].cod) continue;
        long l = compose[g][static_cast<std::size_t>(ba)];
        long r = compose[static_cast<std::size_t>(compose[g][b])][a];
        if (l != r) return fail("associativity");
      }
    }
  }
  return true;
}

FiniteAbelian AbelianValue::structure() const { return lattice_quotient(IntMatrix::identity(generators()), relations); }

AbelianValue AbelianValue::trivial() { return cyclic(1); }

AbelianValue AbelianValue::cyclic(long long order) {
  AbelianValue v;
  v.relations = IntMatrix(1, 1);
  v.relations(0, 0) = order;
  return v;
}

bool CategoryModule::functorial(const Category& cat, std::string* why) const {
  auto fail = [why](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (values.size() != cat.objects || maps.size() != cat.morphisms.size()) return fail("shape");
  std::vector<Coords> co;
  for (const auto& v : values) co.emplace_back(v);
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto& m = cat.morphisms[a];
    if (maps[a].rows != values[m.cod].generators() || maps[a].cols != values[m.dom].generators())
      return fail("map dimensions of morphism " + std::to_string(a));
    // relations must map to relations
    for (std::size_t j = 0; j < values[m.dom].relations.cols; ++j) {
      std::vector<BigInt> r(values[m.dom].generators());
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = values[m.dom].relations(i, j);
      if (!co[m.cod].is_zero(mat_apply(maps[a], r))) return fail("map not well defined on morphism " + std::to_string(a));
    }
  }
  for (std::size_t o = 0; o < cat.objects; ++o) {
    const std::size_t id = cat.identities[o];
    for (std::size_t i = 0; i < values[o].generators(); ++i) {
      auto e = unit(values[o].generators(), i);
      if (!co[o].is_zero(vec_sub(mat_apply(maps[id], e), e))) return fail("identity acts nontrivially");
    }
  }
  for (std::size_t b = 0; b < maps.size(); ++b)
    for (std::size_t a = 0; a < maps.size(); ++a) {
      long ba = cat.compose[b][a];
      if (ba < 0) continue;
      const auto& m = cat.morphisms[a];
      for (std::size_t i = 0; i < values[m.dom].generators(); ++i) {
        auto e = unit(values[m.dom].generators(), i);
        auto lhs = mat_apply(maps[static_cast<std::size_t>(ba)], e);
        auto rhs = mat_apply(maps[b], mat_apply(maps[a], e));
        if (!co[cat.morphisms[b].cod].is_zero(vec_sub(lhs, rhs)))
          return fail("F(ba) != F(b)F(a) for " + std::to_string(b) + "," + std::to_string(a));
      }
    }
  return true;
}

bool CategoryModule::all_trivial() const {
  for (const auto& v : values)
    if (!v.structure().is_trivial()) return false;
  return true;
}

FiniteAbelian h1_category(const Category& cat, const CategoryModule& mod) {
  const auto& mor = cat.morphisms;
  std::vector<std::size_t> off(mor.size() + 1, 0);
  for (std::size_t a = 0; a < mor.size(); ++a) off[a + 1] = off[a] + mod.values[mor[a].cod].generators();
  const std::size_t dim = off.back();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (b, a)
  std::vector<const AbelianValue*> rel_y;
  std::size_t rows = 0;
  for (std::size_t b = 0; b < mor.size(); ++b)
    for (std::size_t a = 0; a < mor.size(); ++a)
      if (cat.compose[b][a] >= 0) {
        pairs.emplace_back(b, a);
        rel_y.push_back(&mod.values[mor[b].cod]);
        rows += mod.values[mor[b].cod].generators();
      }
  IntMatrix phi(rows, dim);
  std::size_t r0 = 0;
  for (auto [b, a] : pairs) {
    const std::size_t ba = static_cast<std::size_t>(cat.compose[b][a]);
    const std::size_t s = mod.values[mor[b].cod].generators();
    add_identity(phi, r0, off[ba], s, 1);
    add_block(phi, r0, off[a], mod.maps[b], -1);
    add_identity(phi, r0, off[b], s, -1);
    r0 += s;
  }
  IntMatrix der = constrained_lattice(phi, block_relations(rel_y));

  std::vector<const AbelianValue*> rel_x;
  for (const auto& m : mor) rel_x.push_back(&mod.values[m.cod]);
  IntMatrix relx = block_relations(rel_x);
  std::size_t inner_cols = 0;
  for (const auto& v : mod.values) inner_cols += v.generators();
  IntMatrix inner(dim, inner_cols + relx.cols);
  std::size_t c0 = 0;
  for (std::size_t o = 0; o < cat.objects; ++o) {
    const std::size_t s = mod.values[o].generators();
    for (std::size_t a = 0; a < mor.size(); ++a) {
      if (mor[a].dom == o) add_block(inner, off[a], c0, mod.maps[a], 1);
      if (mor[a].cod == o) add_identity(inner, off[a], c0, s, -1);
    }
    c0 += s;
  }
  add_block(inner, 0, c0, relx, 1);
  return lattice_quotient(der, inner);
}

FiniteAbelian h0_category(const Category& cat, const CategoryModule& mod) {
  std::vector<std::size_t> off(cat.objects + 1, 0);
  for (std::size_t o = 0; o < cat.objects; ++o) off[o + 1] = off[o] + mod.values[o].generators();
  const std::size_t dim = off.back();
  std::size_t rows = 0;
  std::vector<const AbelianValue*> rel_y;
  for (const auto& m : cat.morphisms) {
    rows += mod.values[m.cod].generators();
    rel_y.push_back(&mod.values[m.cod]);
  }
  IntMatrix psi(rows, dim);
  std::size_t r0 = 0;
  for (std::size_t a = 0; a < cat.morphisms.size(); ++a) {
    const auto& m = cat.morphisms[a];
    add_block(psi, r0, off[m.dom], mod.maps[a], 1);
    add_identity(psi, r0, off[m.cod], mod.values[m.cod].generators(), -1);
    r0 += mod.values[m.cod].generators();
  }
  IntMatrix lim = constrained_lattice(psi, block_relations(rel_y));
  std::vector<const AbelianValue*> rel_o;
  for (const auto& v : mod.values) rel_o.push_back(&v);
  return lattice_quotient(lim, block_relations(rel_o));
}

DerivationCount h1_bruteforce(const Category& cat, const CategoryModule& mod, std::size_t max_candidates) {
  std::vector<Coords> co;
  std::vector<std::vector<std::vector<BigInt>>> elems;
  for (const auto& v : mod.values) {
    co.emplace_back(v);
    elems.push_back(co.back().elements());
  }
  const auto& mor = cat.morphisms;
  BigInt space = 1;
  for (const auto& m : mor) space *= elems[m.cod].size();
  if (space > max_candidates) throw GuardError("h1_bruteforce: search space too large");

  DerivationCount out;
  std::vector<std::size_t> pick(mor.size(), 0);
  for (;;) {
    bool ok = true;
    for (std::size_t b = 0; b < mor.size() && ok; ++b)
      for (std::size_t a = 0; a < mor.size() && ok; ++a) {
        long ba = cat.compose[b][a];
        if (ba < 0) continue;
        const auto& dba = elems[mor[ba].cod][pick[static_cast<std::size_t>(ba)]];
        const auto& da = elems[mor[a].cod][pick[a]];
        const auto& db = elems[mor[b].cod][pick[b]];
        ok = co[mor[b].cod].is_zero(vec_sub(vec_sub(dba, mat_apply(mod.maps[b], da)), db));
      }
    if (ok) ++out.derivations;
    std::size_t k = 0;
    while (k < mor.size()) {
      if (++pick[k] < elems[mor[k].cod].size()) break;
      pick[k] = 0;
      ++k;
    }
    if (k == mor.size()) break;
  }

  std::set<std::vector<std::vector<BigInt>>> inner;
  std::vector<std::size_t> m(cat.objects, 0);
  for (;;) {
    std::vector<std::vector<BigInt>> d;
    for (std::size_t a = 0; a < mor.size(); ++a)
      d.push_back(co[mor[a].cod].key(
          vec_sub(mat_apply(mod.maps[a], elems[mor[a].dom][m[mor[a].dom]]), elems[mor[a].cod][m[mor[a].cod]])));
    inner.insert(std::move(d));
    std::size_t k = 0;
    while (k < cat.objects) {
      if (++m[k] < elems[k].size()) break;
      m[k] = 0;
      ++k;
    }
    if (k == cat.objects) break;
  }
  out.inner = inner.size();
  return out;
}

namespace {

std::size_t pos_in(const Subgroup& s, Index e) {
  auto it = std::lower_bound(s.elements.begin(), s.elements.end(), e);
  if (it == s.elements.end() || *it != e) throw InternalError("element outside subgroup");
  return static_cast<std::size_t>(it - s.elements.begin());
}

using ChainKey = std::vector<std::vector<Index>>;

ChainKey key_of(const std::vector<Subgroup>& chain) {
  ChainKey k;
  for (const auto& s : chain) k.push_back(s.elements);
  return k;
}

struct Canonical {
  std::vector<Subgroup> chain;
  std::vector<Index> iso;  // positions of the input top -> D index
};

Canonical canonical_chain(const FusionSystem& fs, const std::vector<Subgroup>& chain) {
  const Subgroup& top = chain.back();
  Canonical best;
  ChainKey best_key;
  bool have = false;
  for (const auto& phi : f_homs(fs, top)) {
    std::vector<Subgroup> img;
    for (const auto& s : chain) {
      Subgroup t;
      for (Index e : s.elements) t.elements.push_back(phi[pos_in(top, e)]);
      std::sort(t.elements.begin(), t.elements.end());
      for (Index g : s.generators) t.generators.push_back(phi[pos_in(top, g)]);
      img.push_back(std::move(t));
    }
    ChainKey k = key_of(img);
    if (!have || k < best_key) {
      best_key = std::move(k);
      best = {std::move(img), phi};
      have = true;
    }
  }
  // prefer the identity when the chain is already canonical
  if (best_key == key_of(chain)) best = {chain, top.elements};
  return best;
}

void chains_below(const std::vector<Subgroup>& centric, std::vector<Subgroup>& cur,
                  std::vector<std::vector<Subgroup>>& out) {
  out.emplace_back(cur.rbegin(), cur.rend());
  for (const auto& s : centric)
    if (s.order() < cur.back().order() && cur.back().contains(s)) {
      cur.push_back(s);
      chains_below(centric, cur, out);
      cur.pop_back();
    }
}

}  // namespace

ChainCategory chain_category(const FusionSystem& fs) {
  auto classes = f_centric_subgroups(fs);
  std::vector<Subgroup> centric;
  for (const auto& c : classes) centric.insert(centric.end(), c.begin(), c.end());

  std::map<ChainKey, std::vector<Subgroup>> found;
  for (const auto& cls : classes) {
    std::vector<Subgroup> cur{cls.front()};
    std::vector<std::vector<Subgroup>> all;
    chains_below(centric, cur, all);
    for (const auto& ch : all) {
      Canonical c = canonical_chain(fs, ch);
      found.emplace(key_of(c.chain), c.chain);
    }
  }
  ChainCategory cc;
  for (auto& [k, ch] : found) cc.chains.push_back(ch);
  std::stable_sort(cc.chains.begin(), cc.chains.end(), [](const auto& a, const auto& b) {
    if (a.back().order() != b.back().order()) return a.back().order() < b.back().order();
    if (a.size() != b.size()) return a.size() < b.size();
    return key_of(a) < key_of(b);
  });
  std::map<ChainKey, std::size_t> id;
  for (std::size_t i = 0; i < cc.chains.size(); ++i) id[key_of(cc.chains[i])] = i;

  Category& cat = cc.cat;
  cat.objects = cc.chains.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mor_id;
  for (std::size_t b = 0; b < cat.objects; ++b) {
    const auto& sb = cc.chains[b];
    for (unsigned mask = 1; mask < (1u << sb.size()); ++mask) {
      std::vector<Subgroup> tau;
      for (std::size_t i = 0; i < sb.size(); ++i)
        if (mask & (1u << i)) tau.push_back(sb[i]);
      Canonical c = canonical_chain(fs, tau);
      auto it = id.find(key_of(c.chain));
      if (it == id.end()) throw InternalError("chain_category: subchain class missing");
      auto key = std::make_pair(it->second, b);
      if (mor_id.count(key)) continue;
      mor_id[key] = cat.morphisms.size();
      cat.morphisms.push_back({it->second, b});
      cc.witness_chain.push_back(tau);
      cc.witness_iso.push_back(c.iso);
    }
  }
  cat.identities.resize(cat.objects);
  for (std::size_t o = 0; o < cat.objects; ++o) cat.identities[o] = mor_id.at({o, o});
  const std::size_t nm = cat.morphisms.size();
  cat.compose.assign(nm, std::vector<long>(nm, -1));
  for (std::size_t b = 0; b < nm; ++b)
    for (std::size_t a = 0; a < nm; ++a) {
      if (cat.morphisms[b].dom != cat.morphisms[a].cod) continue;
      auto it = mor_id.find({cat.morphisms[a].dom, cat.morphisms[b].cod});
      if (it == mor_id.end()) throw InternalError("chain_category: subchain order is not transitive");
      cat.compose[b][a] = static_cast<long>(it->second);
    }
  return cc;
}

SchurEntry schur_table(const GroupTable& g) {
  const std::size_t n = g.order();
  std::map<std::size_t, std::size_t> hist;
  for (Index e = 0; e < n; ++e) ++hist[g.element_order(e)];
  SchurEntry s;
  s.hit = true;
  if ((n & (n - 1)) == 0) {
    s.group = n == 1 ? "1" : "2-group";
  } else if (hist.count(n)) {
    s.group = "C" + std::to_string(n);
  } else if (n == 6 && !g.is_abelian()) {
    s.group = "S3";
  } else if (n == 12 && hist == std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {3, 8}}) {
    s.group = "A4";  // multiplier C2
  } else if (n == 24 && hist == std::map<std::size_t, std::size_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}) {
    s.group = "S4";  // multiplier C2
  } else {
    s.hit = false;
    s.group = "order " + std::to_string(n);
  }
  return s;
}

AValues a_values(const FusionSystem& fs, const ChainCategory& cc, int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("a_values: i must be 1 or 2");
  const Category& cat = cc.cat;
  std::vector<GroupPtr> auts;
  for (const auto& ch : cc.chains) auts.push_back(aut_f(fs, ch));
  AValues out;

  if (i == 2) {
    for (const auto& g : auts) {
      SchurEntry s = schur_table(*g);
      if (!s.hit) out.misses.push_back("table miss: Aut_F(sigma) of " + s.group);
      if (!s.odd_multiplier.is_trivial()) throw InternalError("a_values: nontrivial odd multiplier");
      out.module.values.push_back(AbelianValue::trivial());
      out.names.push_back(s.hit ? "0 (" + s.group + ")" : "?");
    }
    for (std::size_t a = 0; a < cat.morphisms.size(); ++a) {
      IntMatrix one(1, 1);
      one(0, 0) = 1;
      out.module.maps.push_back(one);
    }
    return out;
  }

  // A^1(sigma) = Hom(Aut_F(sigma), F^x): homomorphisms to Z/E through the
  // largest odd abelian quotient.
  std::vector<std::vector<std::vector<long>>> chars(auts.size());
  std::vector<GroupPtr> quots;
  std::vector<std::vector<long>> coset_maps;
  long long e_all = 1;
  for (const auto& g : auts) {
    std::vector<Index> gens;
    for (Index x = 0; x < g->order(); ++x)
      if ((g->element_order(x) & (g->element_order(x) - 1)) == 0) gens.push_back(x);
    for (Index x : derived_subgroup(*g).elements) gens.push_back(x);
    Subgroup nsub = generate(*g, gens);
    std::vector<long> coset(g->order(), -1);
    long next = 0;
    for (Index a = 0; a < g->order(); ++a) {
      if (coset[a] >= 0) continue;
      for (Index h : nsub.elements) coset[g->mul(a, h)] = next;
      ++next;
    }
    quots.push_back(quotient_table(g, nsub));
    coset_maps.push_back(std::move(coset));
    e_all = std::lcm(e_all, static_cast<long long>(quots.back()->order()));
  }
  GroupPtr target = cyclic_group(static_cast<std::size_t>(e_all));
  for (std::size_t o = 0; o < auts.size(); ++o) {
    const auto& q = quots[o];
    const std::size_t ng = q->generators().size();
    std::size_t total = 1;
    for (std::size_t k = 0; k < ng; ++k) total *= static_cast<std::size_t>(e_all);
    if (total > (1u << 20)) throw GuardError("a_values: too many candidate homomorphisms");
    std::set<std::vector<long>> seen;
    for (std::size_t c = 0; c < total; ++c) {
      std::vector<Index> imgs;
      std::size_t t = c;
      for (std::size_t k = 0; k < ng; ++k) {
        imgs.push_back(static_cast<Index>(t % static_cast<std::size_t>(e_all)));
        t /= static_cast<std::size_t>(e_all);
      }
      auto h = extend_homomorphism(q, target, imgs);
      if (!h) continue;
      std::vector<long> chi(auts[o]->order());
      for (Index x = 0; x < auts[o]->order(); ++x) chi[x] = (*h)(static_cast<Index>(coset_maps[o][x]));
      if (seen.insert(chi).second) chars[o].push_back(std::move(chi));
    }
    std::sort(chars[o].begin(), chars[o].end());

    // relations of the generating set "all elements"
    const std::size_t s = chars[o].size(), gn = auts[o]->order();
    AbelianValue v;
    if (s == 1) {
      v = AbelianValue::trivial();
    } else {
      IntMatrix x(gn, s + gn);
      for (std::size_t r = 0; r < gn; ++r) {
        for (std::size_t j = 0; j < s; ++j) x(r, j) = chars[o][j][r];
        x(r, s + r) = e_all;
      }
      IntMatrix k = integer_kernel(x);
      v.relations = IntMatrix(s, k.cols);
      for (std::size_t r = 0; r < s; ++r)
        for (std::size_t j = 0; j < k.cols; ++j) v.relations(r, j) = k(r, j);
    }
    out.module.values.push_back(v);
    out.names.push_back(v.structure().to_string());
  }

  for (std::size_t a = 0; a < cat.morphisms.size(); ++a) {
    const std::size_t dom = cat.morphisms[a].dom, cod = cat.morphisms[a].cod;
    const Subgroup& top_a = cc.chains[dom].back();
    const Subgroup& top_b = cc.chains[cod].back();
    const Subgroup& top_t = cc.witness_chain[a].back();
    const auto& iso = cc.witness_iso[a];
    std::map<Index, Index> iso_inv;  // D index in top_a -> D index in top_t
    for (std::size_t p = 0; p < iso.size(); ++p) iso_inv[iso[p]] = top_t.elements[p];
    std::map<std::vector<long>, Index> lookup_a;
    for (Index x = 0; x < auts[dom]->order(); ++x) lookup_a[auts[dom]->coords(x)] = x;

    // h: Aut_F(chain_b) -> Aut_F(chain_a), restriction then transport
    std::vector<Index> h(auts[cod]->order());
    for (Index g = 0; g < auts[cod]->order(); ++g) {
      const auto& perm = auts[cod]->coords(g);
      std::vector<long> psi(top_a.order());
      for (std::size_t qpos = 0; qpos < top_a.order(); ++qpos) {
        Index et = iso_inv.at(top_a.elements[qpos]);
        Index moved = top_b.elements[static_cast<std::size_t>(perm[pos_in(top_b, et)])];
        psi[qpos] = static_cast<long>(pos_in(top_a, iso[pos_in(top_t, moved)]));
      }
      auto it = lookup_a.find(psi);
      if (it == lookup_a.end()) throw InternalError("a_values: transported automorphism outside Aut_F");
      h[g] = it->second;
    }
    const std::size_t sd = out.module.values[dom].generators(), sc = out.module.values[cod].generators();
    IntMatrix m(sc, sd);
    for (std::size_t j = 0; j < chars[dom].size() && sd > 0; ++j) {
      std::vector<long> pulled(auts[cod]->order());
      for (Index g = 0; g < auts[cod]->order(); ++g) pulled[g] = chars[dom][j][h[g]];
      auto it = std::find(chars[cod].begin(), chars[cod].end(), pulled);
      if (it == chars[cod].end()) throw InternalError("a_values: pulled back character missing");
      m(static_cast<std::size_t>(it - chars[cod].begin()), j) = 1;
    }
    out.module.maps.push_back(m);
  }
  return out;
}

bool GluingReport::pass() const {
  return category_ok && functorial && misses.empty() && h0_a2.is_trivial() && h1_a1.is_trivial();
}

std::string GluingReport::to_string() const {
  std::ostringstream os;
  os << "objects " << objects << ", morphisms " << morphisms << '\n';
  for (std::size_t o = 0; o < a1.size(); ++o) os << "  object " << o << ": A1 " << a1[o] << ", A2 " << a2[o] << '\n';
  os << "H0(A2) = " << h0_a2.to_string() << ", H1(A1) = " << h1_a1.to_string()
     << (solver_used ? " (derivation solver)" : " (all values trivial)") << '\n';
  for (const auto& m : misses) os << "  " << m << '\n';
  return os.str();
}

GluingReport gluing_check(const GroupParams& params, FusionCase c) {
  FusionSystem fs = build_fusion(params, c);
  ChainCategory cc = chain_category(fs);
  GluingReport r;
  r.objects = cc.cat.objects;
  r.morphisms = cc.cat.morphisms.size();
  r.category_ok = cc.cat.verify();
  AValues a1 = a_values(fs, cc, 1);
  AValues a2 = a_values(fs, cc, 2);
  r.a1 = a1.names;
  r.a2 = a2.names;
  r.misses = a2.misses;
  r.functorial = a1.module.functorial(cc.cat) && a2.module.functorial(cc.cat);
  if (a1.module.all_trivial() && a2.module.all_trivial()) return r;
  r.solver_used = true;
  r.h1_a1 = h1_category(cc.cat, a1.module);
  r.h0_a2 = h0_category(cc.cat, a2.module);
  return r;
}

}  // namespace blocklab
