#include "blocklab/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "blocklab/errors.hpp"

namespace blocklab {

namespace {

constexpr std::size_t kDenseLimit = 1024;

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long floor_mod(long a, long b) { return a - floor_div(a, b) * b; }

std::vector<Index> sorted_unique(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Subgroup normal_closure(const GroupTable& g, std::vector<Index> gens) {
  Subgroup s = generate(g, gens);
  while (true) {
    bool grown = false;
    for (Index x : g.generators()) {
      for (Index h : std::vector<Index>(s.generators)) {
        Index c = g.conj(x, h);
        if (!s.contains(c)) {
          gens.push_back(c);
          grown = true;
        }
      }
      if (grown) break;
    }
    if (!grown) return s;
    s = generate(g, gens);
  }
}

}  // namespace

std::size_t max_table_order() {
  if (const char* env = std::getenv("BLOCKLAB_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 10;
}

GroupParams::GroupParams(int n_, int m_) : n(n_), m(m_) {
  if (n < 3) throw std::invalid_argument("GroupParams: n must be >= 3 (got " + std::to_string(n) + ")");
  if (m < 2) throw std::invalid_argument("GroupParams: m must be >= 2 (got " + std::to_string(m) + ")");
  if (n + m - 1 > 13)
    throw GuardError("GroupParams: order 2^" + std::to_string(n + m - 1) + " exceeds the 2^13 desk-scale guard");
}

FamilyElement FamilyArithmetic::normalize(long i, long j, long k) const {
  const long xq = 1L << (p_.n - 2);   // x^{2^{n-2}} = z^{2^{m-1}}
  const long zord = 1L << p_.m;
  long q = floor_div(i, xq);
  FamilyElement e;
  e.i = i - q * xq;
  e.j = static_cast<int>(floor_mod(j, 2));
  e.k = floor_mod(k + q * (zord / 2), zord);
  return e;
}

FamilyElement FamilyArithmetic::multiply(const FamilyElement& a, const FamilyElement& b) const {
  long i = a.i + (a.j == 0 ? b.i : -b.i);
  return normalize(i, a.j + b.j, a.k + b.k);
}

FamilyElement FamilyArithmetic::inverse(const FamilyElement& a) const {
  // (x^i y^j z^k)^{-1} = z^{-k} y^{-j} x^{-i}
  if (a.j == 0) return normalize(-a.i, 0, -a.k);
  return normalize(a.i, 1, -a.k);  // x^i y is an involution up to z
}

Index FamilyArithmetic::index(const FamilyElement& e) const {
  return static_cast<Index>((e.i * 2 + e.j) * (1L << p_.m) + e.k);
}

FamilyElement FamilyArithmetic::element(Index idx) const {
  long zord = 1L << p_.m;
  FamilyElement e;
  e.k = idx % zord;
  long rest = idx / zord;
  e.j = static_cast<int>(rest % 2);
  e.i = rest / 2;
  return e;
}

GroupTable::GroupTable(std::size_t order, MulFn mul_fn, std::vector<std::vector<long>> coords,
                       GroupDescriptor descriptor, std::vector<Index> generators)
    : order_(order), mul_(std::move(mul_fn)), coords_(std::move(coords)), descriptor_(std::move(descriptor)) {
  if (order_ == 0) throw std::invalid_argument("GroupTable: empty group");
  if (coords_.empty()) {
    coords_.resize(order_);
    for (std::size_t a = 0; a < order_; ++a) coords_[a] = {static_cast<long>(a)};
  }
  if (coords_.size() != order_) throw std::invalid_argument("GroupTable: coordinate list has wrong length");
  if (order_ <= kDenseLimit) {
    dense_.resize(order_ * order_);
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b) dense_[a * order_ + b] = mul_(static_cast<Index>(a), static_cast<Index>(b));
  }
  for (std::size_t a = 0; a < order_; ++a) {
    Index ia = static_cast<Index>(a);
    if (mul(0, ia) != ia || mul(ia, 0) != ia) throw InternalError("GroupTable: index 0 is not the identity");
  }
  orders_.assign(order_, 1);
  inv_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    Index ia = static_cast<Index>(a);
    Index p = ia;
    Index prev = 0;
    std::size_t k = 1;
    while (p != 0) {
      prev = p;
      p = mul(p, ia);
      ++k;
      if (k > order_ + 1) throw InternalError("GroupTable: element of unbounded order");
    }
    orders_[a] = k;
    inv_[a] = orders_[a] == 1 ? 0 : prev;
  }
  if (generators.empty()) {
    std::vector<bool> covered(order_, false);
    covered[0] = true;
    std::size_t count = 1;
    for (std::size_t a = 1; a < order_ && count < order_; ++a) {
      if (covered[a]) continue;
      generators.push_back(static_cast<Index>(a));
      Subgroup s = generate(*this, generators);
      for (Index e : s.elements) covered[e] = true;
      count = s.order();
    }
  }
  gens_ = std::move(generators);
}

Index GroupTable::pow(Index a, long long e) const {
  long long o = static_cast<long long>(orders_[a]);
  e %= o;
  if (e < 0) e += o;
  Index r = 0;
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::size_t GroupTable::exponent() const {
  std::size_t e = 1;
  for (std::size_t o : orders_) e = std::lcm(e, o);
  return e;
}

bool GroupTable::is_abelian() const {
  for (Index a : gens_)
    for (Index b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string GroupTable::label(Index a) const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < coords_[a].size(); ++i) out << (i ? "," : "") << coords_[a][i];
  out << "]";
  return out.str();
}

bool GroupTable::check_associativity(std::mt19937_64& rng, int samples) const {
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(order_ - 1));
  for (int s = 0; s < samples; ++s) {
    Index a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

bool Subgroup::contains(Index a) const { return std::binary_search(elements.begin(), elements.end(), a); }

bool Subgroup::contains(const Subgroup& other) const {
  return std::includes(elements.begin(), elements.end(), other.elements.begin(), other.elements.end());
}

GroupPtr make_group(const GroupParams& params) {
  FamilyArithmetic arith(params);
  std::size_t order = static_cast<std::size_t>(params.order());
  std::vector<std::vector<long>> coords(order);
  for (std::size_t a = 0; a < order; ++a) {
    FamilyElement e = arith.element(static_cast<Index>(a));
    coords[a] = {e.i, e.j, e.k};
  }
  auto mul = [arith](Index a, Index b) {
    return arith.index(arith.multiply(arith.element(a), arith.element(b)));
  };
  GroupDescriptor d{"D*C", params.n, params.m, nullptr, {}};
  std::vector<Index> gens = {arith.index(arith.x()), arith.index(arith.y()), arith.index(arith.z())};
  return std::make_shared<GroupTable>(order, mul, std::move(coords), std::move(d), std::move(gens));
}

Index family_index(const GroupTable& g, const FamilyElement& e) {
  if (g.descriptor().family != "D*C") throw std::invalid_argument("family_index: not a D*C family table");
  FamilyArithmetic arith(GroupParams(g.descriptor().n, g.descriptor().m));
  return arith.index(arith.normalize(e.i, e.j, e.k));
}

GroupPtr cyclic_group(std::size_t k) {
  if (k == 0) throw std::invalid_argument("cyclic_group: order must be positive");
  auto mul = [k](Index a, Index b) { return static_cast<Index>((a + b) % k); };
  std::vector<Index> gens;
  if (k > 1) gens.push_back(1);
  return std::make_shared<GroupTable>(k, mul, std::vector<std::vector<long>>{},
                                      GroupDescriptor{"cyclic", 0, 0, nullptr, {}}, gens);
}

GroupPtr permutation_group(std::size_t degree, const std::vector<std::vector<Index>>& generators) {
  using Perm = std::vector<Index>;
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  for (const auto& p : generators) {
    if (p.size() != degree) throw std::invalid_argument("permutation_group: generator has wrong degree");
    if (sorted_unique(p) != id) throw std::invalid_argument("permutation_group: generator is not a permutation");
  }
  auto compose = [](const Perm& p, const Perm& q) {  // p o q
    Perm r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  std::set<Perm> seen{id};
  std::deque<Perm> todo{id};
  while (!todo.empty()) {
    Perm cur = todo.front();
    todo.pop_front();
    for (const auto& gen : generators) {
      Perm nxt = compose(cur, gen);
      if (seen.insert(nxt).second) todo.push_back(nxt);
    }
  }
  std::vector<Perm> elems(seen.begin(), seen.end());
  auto lookup = std::make_shared<std::map<Perm, Index>>();
  for (std::size_t i = 0; i < elems.size(); ++i) (*lookup)[elems[i]] = static_cast<Index>(i);
  auto shared = std::make_shared<std::vector<Perm>>(elems);
  auto mul = [shared, lookup, compose](Index a, Index b) { return lookup->at(compose((*shared)[a], (*shared)[b])); };
  std::vector<std::vector<long>> coords;
  for (const auto& p : elems) coords.emplace_back(p.begin(), p.end());
  std::vector<Index> gens;
  for (const auto& p : generators)
    if (p != id) gens.push_back(lookup->at(p));
  gens = sorted_unique(gens);
  return std::make_shared<GroupTable>(elems.size(), mul, std::move(coords),
                                      GroupDescriptor{"permutation", 0, 0, nullptr, {}}, gens);
}

GroupPtr symmetric_group(std::size_t degree) {
  std::vector<std::vector<Index>> gens;
  if (degree >= 2) {
    std::vector<Index> swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<Index>((i + 1) % degree);
    gens = {swap, cycle};
  }
  return permutation_group(degree, gens);
}

Subgroup generate(const GroupTable& g, std::vector<Index> gens) {
  gens = sorted_unique(std::move(gens));
  gens.erase(std::remove(gens.begin(), gens.end(), Index{0}), gens.end());
  std::vector<bool> seen(g.order(), false);
  std::vector<Index> elems{0};
  seen[0] = true;
  for (std::size_t pos = 0; pos < elems.size(); ++pos) {
    Index cur = elems[pos];
    for (Index s : gens) {
      Index nxt = g.mul(cur, s);
      if (!seen[nxt]) {
        seen[nxt] = true;
        elems.push_back(nxt);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems), std::move(gens)};
}

Subgroup whole_group(const GroupTable& g) { return generate(g, g.generators()); }

Subgroup trivial_subgroup() { return Subgroup{{0}, {}}; }

Subgroup center(const GroupTable& g) {
  std::vector<Index> elems;
  for (Index a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Index s : g.generators())
      if (g.mul(a, s) != g.mul(s, a)) {
        central = false;
        break;
      }
    if (central) elems.push_back(a);
  }
  return generate(g, elems);
}

Subgroup derived_subgroup(const GroupTable& g) {
  std::vector<Index> comms;
  for (Index a : g.generators())
    for (Index b : g.generators()) comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return normal_closure(g, comms);
}

Subgroup centralizer(const GroupTable& g, Index e) {
  if (e >= g.order()) throw std::invalid_argument("centralizer: element not in group");
  std::vector<Index> elems;
  for (Index a = 0; a < g.order(); ++a)
    if (g.mul(a, e) == g.mul(e, a)) elems.push_back(a);
  Subgroup s = generate(g, elems);
  return s;
}

Subgroup centralizer(const GroupTable& g, const Subgroup& s) {
  std::vector<Index> elems;
  for (Index a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Index h : s.generators)
      if (g.mul(a, h) != g.mul(h, a)) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(a);
  }
  return generate(g, elems);
}

Subgroup normalizer(const GroupTable& g, const Subgroup& s) {
  for (Index e : s.elements)
    if (e >= g.order()) throw std::invalid_argument("normalizer: subgroup not in group");
  std::vector<Index> elems;
  for (Index a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Index h : s.generators)
      if (!s.contains(g.conj(a, h))) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(a);
  }
  return generate(g, elems);
}

Subgroup conjugate(const GroupTable& g, const Subgroup& s, Index by) {
  Subgroup out;
  out.elements.reserve(s.elements.size());
  for (Index e : s.elements) out.elements.push_back(g.conj(by, e));
  std::sort(out.elements.begin(), out.elements.end());
  for (Index e : s.generators) out.generators.push_back(g.conj(by, e));
  return out;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(out.elements));
  out.generators = out.elements;
  out.generators.erase(out.generators.begin());
  return out;
}

bool is_normal(const GroupTable& g, const Subgroup& s) {
  for (Index x : g.generators())
    for (Index h : s.generators)
      if (!s.contains(g.conj(x, h))) return false;
  return true;
}

Subgroup o2(const GroupTable& g) {
  std::vector<Index> gens;
  for (Index a = 1; a < g.order(); ++a) {
    std::size_t o = g.element_order(a);
    if ((o & (o - 1)) != 0) continue;
    Subgroup closure = normal_closure(g, {a});
    std::size_t k = closure.order();
    if ((k & (k - 1)) == 0) gens.push_back(a);
  }
  return generate(g, gens);
}

std::size_t two_regular_class_count(const GroupTable& g) {
  std::size_t count = 0;
  for (const auto& c : conjugacy_classes(g))
    if (g.element_order(c.representative) % 2 == 1) ++count;
  return count;
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupTable& g) {
  if (g.order() > kMaxClassOrder)
    throw GuardError("conjugacy_classes: group order " + std::to_string(g.order()) + " exceeds 2^13");
  std::vector<bool> seen(g.order(), false);
  std::vector<ConjugacyClass> out;
  for (Index a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    ConjugacyClass cls{a, {a}};
    seen[a] = true;
    for (std::size_t pos = 0; pos < cls.elements.size(); ++pos) {
      for (Index s : g.generators()) {
        Index c = g.conj(s, cls.elements[pos]);
        if (!seen[c]) {
          seen[c] = true;
          cls.elements.push_back(c);
        }
      }
    }
    std::sort(cls.elements.begin(), cls.elements.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::size_t> class_lookup(const GroupTable& g, const std::vector<ConjugacyClass>& classes) {
  std::vector<std::size_t> lookup(g.order(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Index e : classes[c].elements) lookup[e] = c;
  return lookup;
}

GroupPtr subgroup_table(const GroupPtr& g, const Subgroup& s) {
  auto elems = std::make_shared<std::vector<Index>>(s.elements);
  auto position = [elems](Index parent) {
    auto it = std::lower_bound(elems->begin(), elems->end(), parent);
    if (it == elems->end() || *it != parent) throw InternalError("subgroup_table: subgroup not closed");
    return static_cast<Index>(it - elems->begin());
  };
  auto mul = [g, elems, position](Index a, Index b) { return position(g->mul((*elems)[a], (*elems)[b])); };
  std::vector<std::vector<long>> coords;
  for (Index e : s.elements) coords.push_back(g->coords(e));
  std::vector<Index> gens;
  for (Index e : s.generators) gens.push_back(position(e));
  gens = sorted_unique(gens);
  gens.erase(std::remove(gens.begin(), gens.end(), Index{0}), gens.end());
  // keep the witness order for generator-based searches
  std::vector<Index> ordered;
  for (Index e : s.generators) {
    Index p = position(e);
    if (p != 0 && std::find(ordered.begin(), ordered.end(), p) == ordered.end()) ordered.push_back(p);
  }
  return std::make_shared<GroupTable>(s.order(), mul, std::move(coords),
                                      GroupDescriptor{"subgroup", 0, 0, g, {}}, ordered);
}

GroupPtr quotient_table(const GroupPtr& g, const Subgroup& normal) {
  if (!is_normal(*g, normal)) throw std::invalid_argument("quotient_table: subgroup is not normal");
  std::vector<long> coset_of(g->order(), -1);
  std::vector<Index> reps;
  for (Index a = 0; a < g->order(); ++a) {
    if (coset_of[a] >= 0) continue;
    long id = static_cast<long>(reps.size());
    reps.push_back(a);
    for (Index h : normal.elements) coset_of[g->mul(a, h)] = id;
  }
  auto cos = std::make_shared<std::vector<long>>(coset_of);
  auto rp = std::make_shared<std::vector<Index>>(reps);
  auto mul = [g, cos, rp](Index a, Index b) { return static_cast<Index>((*cos)[g->mul((*rp)[a], (*rp)[b])]); };
  std::vector<std::vector<long>> coords;
  for (Index r : reps) coords.push_back(g->coords(r));
  std::vector<Index> gens;
  for (Index s : g->generators()) gens.push_back(static_cast<Index>(coset_of[s]));
  gens = sorted_unique(gens);
  gens.erase(std::remove(gens.begin(), gens.end(), Index{0}), gens.end());
  return std::make_shared<GroupTable>(reps.size(), mul, std::move(coords),
                                      GroupDescriptor{"quotient", 0, 0, g, {}}, gens);
}

std::vector<Subgroup> subgroups_isomorphic_to_d8cm(const GroupTable& g, int m) {
  if (g.order() > kMaxClassOrder) throw GuardError("subgroups_isomorphic_to_d8cm: group too large");
  const std::size_t target = std::size_t{1} << (m + 2);
  const std::size_t zord = std::size_t{1} << m;
  std::vector<Index> cs, as, bs;
  for (Index e = 0; e < g.order(); ++e) {
    std::size_t o = g.element_order(e);
    if (o == zord) cs.push_back(e);
    if (o == 4) as.push_back(e);
    if (o == 2) bs.push_back(e);
  }
  std::set<Subgroup> found;
  auto covered = [&](Index a, Index b, Index c) {
    for (const auto& s : found)
      if (s.contains(a) && s.contains(b) && s.contains(c)) return true;
    return false;
  };
  for (Index c : cs) {
    Index t = g.pow(c, static_cast<long long>(zord / 2));
    for (Index a : as) {
      if (g.mul(a, a) != t || g.mul(a, c) != g.mul(c, a)) continue;
      Index ainv = g.inv(a);
      for (Index b : bs) {
        if (g.mul(b, c) != g.mul(c, b) || g.conj(b, a) != ainv) continue;
        if (covered(a, b, c)) continue;
        Subgroup s = generate(g, {a, b, c});
        if (s.order() == target) {
          s.generators = {a, b, c};
          found.insert(std::move(s));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<Subgroup>> subgroup_classes(const GroupTable& g, const std::vector<Subgroup>& subgroups) {
  std::set<std::vector<Index>> assigned;
  std::vector<std::vector<Subgroup>> out;
  for (const auto& s : subgroups) {
    if (assigned.count(s.elements)) continue;
    std::vector<Subgroup> orbit{s};
    assigned.insert(s.elements);
    for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
      for (Index x : g.generators()) {
        Subgroup c = conjugate(g, orbit[pos], x);
        if (assigned.insert(c.elements).second) orbit.push_back(std::move(c));
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool GroupMap::is_bijective() const {
  if (domain->order() != codomain->order()) return false;
  std::vector<bool> hit(codomain->order(), false);
  for (Index v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::size_t GroupMap::order() const {
  if (domain != codomain || !is_bijective()) throw std::invalid_argument("GroupMap::order: not an automorphism");
  std::vector<bool> seen(map.size(), false);
  std::size_t result = 1;
  for (std::size_t a = 0; a < map.size(); ++a) {
    if (seen[a]) continue;
    std::size_t len = 0;
    for (std::size_t b = a; !seen[b]; b = map[b]) {
      seen[b] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

GroupMap GroupMap::compose(const GroupMap& inner) const {
  if (inner.codomain != domain) throw std::invalid_argument("GroupMap::compose: incompatible maps");
  GroupMap out{inner.domain, codomain, {}, std::vector<Index>(inner.map.size())};
  for (std::size_t a = 0; a < inner.map.size(); ++a) out.map[a] = map[inner.map[a]];
  for (Index gen : inner.domain->generators()) out.generator_images.push_back(out.map[gen]);
  return out;
}

GroupMap GroupMap::inverse() const {
  if (!is_bijective()) throw std::invalid_argument("GroupMap::inverse: not bijective");
  GroupMap out{codomain, domain, {}, std::vector<Index>(map.size())};
  for (std::size_t a = 0; a < map.size(); ++a) out.map[map[a]] = static_cast<Index>(a);
  for (Index gen : codomain->generators()) out.generator_images.push_back(out.map[gen]);
  return out;
}

std::optional<GroupMap> extend_homomorphism(const GroupPtr& domain, const GroupPtr& codomain,
                                            const std::vector<Index>& generator_images) {
  const auto& gens = domain->generators();
  if (generator_images.size() != gens.size())
    throw std::invalid_argument("extend_homomorphism: need one image per generator");
  constexpr Index kUnset = ~Index{0};
  std::vector<Index> map(domain->order(), kUnset);
  map[0] = 0;
  std::vector<Index> queue{0};
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    Index cur = queue[pos];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Index nxt = domain->mul(cur, gens[s]);
      Index img = codomain->mul(map[cur], generator_images[s]);
      if (map[nxt] == kUnset) {
        map[nxt] = img;
        queue.push_back(nxt);
      } else if (map[nxt] != img) {
        return std::nullopt;
      }
    }
  }
  return GroupMap{domain, codomain, generator_images, std::move(map)};
}

GroupMap identity_map(const GroupPtr& g) {
  std::vector<Index> map(g->order());
  std::iota(map.begin(), map.end(), 0);
  return GroupMap{g, g, g->generators(), std::move(map)};
}

std::vector<GroupMap> automorphism_search(const GroupPtr& g, const AutomorphismQuery& query) {
  if (g->order() > query.max_group_order)
    throw GuardError("automorphism_search: group order " + std::to_string(g->order()) + " exceeds " +
                     std::to_string(query.max_group_order));
  const auto& gens = g->generators();
  std::vector<std::vector<Index>> candidates(gens.size());
  double space = 1;
  for (std::size_t s = 0; s < gens.size(); ++s) {
    if (query.fixed_points && query.fixed_points->contains(gens[s])) {
      candidates[s] = {gens[s]};
    } else {
      for (Index e = 0; e < g->order(); ++e)
        if (g->element_order(e) == g->element_order(gens[s])) candidates[s].push_back(e);
    }
    space *= static_cast<double>(candidates[s].size());
  }
  if (space > static_cast<double>(query.max_candidates))
    throw GuardError("automorphism_search: candidate space exceeds the search guard");

  std::vector<GroupMap> out;
  std::vector<std::size_t> odometer(gens.size(), 0);
  std::vector<Index> images(gens.size());
  while (true) {
    for (std::size_t s = 0; s < gens.size(); ++s) images[s] = candidates[s][odometer[s]];
    if (auto f = extend_homomorphism(g, g, images); f && f->is_bijective()) {
      bool ok = true;
      if (query.fixed_points)
        for (Index e : query.fixed_points->elements)
          if ((*f)(e) != e) {
            ok = false;
            break;
          }
      if (ok && query.order && f->order() != *query.order) ok = false;
      if (ok) out.push_back(std::move(*f));
    }
    std::size_t s = gens.size();
    while (s > 0) {
      --s;
      if (++odometer[s] < candidates[s].size()) break;
      odometer[s] = 0;
      if (s == 0) return out;
    }
    if (gens.empty()) return out;
  }
}

GroupPtr semidirect_product(const GroupPtr& g, const GroupMap& a) {
  if (a.domain != g || a.codomain != g || !a.is_bijective())
    throw std::invalid_argument("semidirect_product: map is not an automorphism of the base group");
  std::size_t t = a.order();
  std::size_t n = g->order();
  auto powers = std::make_shared<std::vector<std::vector<Index>>>();
  powers->push_back(identity_map(g).map);
  for (std::size_t c = 1; c < t; ++c) {
    std::vector<Index> next(n);
    for (std::size_t e = 0; e < n; ++e) next[e] = a.map[powers->back()[e]];
    powers->push_back(std::move(next));
  }
  auto mul = [g, powers, n, t](Index u, Index v) {
    std::size_t c1 = u / n, e1 = u % n, c2 = v / n, e2 = v % n;
    Index e = g->mul(static_cast<Index>(e1), (*powers)[c1][e2]);
    return static_cast<Index>(((c1 + c2) % t) * n + e);
  };
  std::vector<std::vector<long>> coords(n * t);
  for (std::size_t c = 0; c < t; ++c)
    for (std::size_t e = 0; e < n; ++e) {
      coords[c * n + e] = g->coords(static_cast<Index>(e));
      coords[c * n + e].push_back(static_cast<long>(c));
    }
  std::vector<Index> gens = g->generators();
  if (t > 1) gens.push_back(static_cast<Index>(n));
  GroupDescriptor d{"semidirect", 0, 0, g, a.generator_images};
  return std::make_shared<GroupTable>(n * t, mul, std::move(coords), std::move(d), gens);
}

}  // namespace blocklab
