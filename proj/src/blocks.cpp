#include "blocklab/blocks.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "blocklab/errors.hpp"

namespace blocklab {

namespace {

using u64 = std::uint64_t;

int poly_degree(u64 p) {
  int d = -1;
  while (p) {
    p >>= 1;
    ++d;
  }
  return d;
}

u64 poly_mod(u64 a, u64 m) {
  int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
  return a;
}

bool irreducible(u64 p) {
  int d = poly_degree(p);
  for (u64 q = 2; poly_degree(q) <= d / 2; ++q)
    if (poly_mod(p, q) == 0) return false;
  return true;
}

long odd_part_of(long e) {
  while (e % 2 == 0) e /= 2;
  return e;
}

int order_of_two(long r) {
  if (r == 1) return 1;
  long v = 2 % r;
  int f = 1;
  while (v != 1) {
    v = v * 2 % r;
    ++f;
  }
  return f;
}

}  // namespace

GF2Field::GF2Field(int degree) : f_(degree), modulus_(0) {
  if (degree < 1 || degree > 31) throw std::invalid_argument("GF2Field: degree must be in [1, 31]");
  for (u64 p = (u64{1} << degree) | 1; p < (u64{1} << (degree + 1)); p += 2)
    if (irreducible(p)) {
      modulus_ = p;
      return;
    }
  throw InternalError("GF2Field: no irreducible polynomial found");
}

u64 GF2Field::mul(u64 a, u64 b) const {
  u64 r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return poly_mod(r, modulus_);
}

u64 GF2Field::pow(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 GF2Field::multiplicative_order(u64 a) const {
  if (a == 0) throw std::invalid_argument("GF2Field: zero has no multiplicative order");
  u64 o = 1;
  for (u64 p = a; p != 1; p = mul(p, a)) ++o;
  return o;
}

u64 GF2Field::primitive_element() const {
  for (u64 a = 1; a < size(); ++a)
    if (multiplicative_order(a) == size() - 1) return a;
  throw InternalError("GF2Field: no primitive element");
}

ModTwoEmbedding::ModTwoEmbedding(long exponent, int choice)
    : e_(exponent), r_(odd_part_of(exponent)), field_(order_of_two(odd_part_of(exponent))), beta_(1) {
  if (exponent < 1) throw std::invalid_argument("ModTwoEmbedding: exponent must be positive");
  u64 base = field_.pow(field_.primitive_element(), (field_.size() - 1) / static_cast<u64>(r_));
  std::vector<long> units;
  for (long u = 1; u <= std::max(1L, r_); ++u)
    if (std::gcd(u, r_) == 1) units.push_back(u);
  beta_ = field_.pow(base, static_cast<u64>(units[static_cast<std::size_t>(choice) % units.size()]));
  if (field_.multiplicative_order(beta_) != static_cast<u64>(r_))
    throw InternalError("ModTwoEmbedding: beta has the wrong order");
}

u64 ModTwoEmbedding::reduce(const Cyclotomic& c) const {
  const long n = c.conductor();
  if (e_ % n != 0) throw std::invalid_argument("ModTwoEmbedding: conductor does not divide the exponent");
  if (!c.is_integral()) throw std::domain_error("ModTwoEmbedding: element is not integral");
  const long step = e_ / n;
  u64 out = 0;
  const auto& co = c.coeffs();
  for (std::size_t i = 0; i < co.size(); ++i) {
    if (co[i] == 0) continue;
    if (numerator(co[i]) % 2 == 0) continue;
    long ex = static_cast<long>((static_cast<long long>(i) * step) % r_);
    out ^= field_.pow(beta_, static_cast<u64>(ex));
  }
  return out;
}

BlockPartition block_partition(const CharacterTable& t, int embedding_choice) {
  ModTwoEmbedding emb(static_cast<long>(t.group->exponent()), embedding_choice);
  std::map<std::vector<u64>, std::size_t> key_to_block;
  BlockPartition p;
  const int full = nu2(static_cast<long long>(t.group_order()));
  for (std::size_t c = 0; c < t.size(); ++c) {
    const long long deg = t.degree(c);
    std::vector<u64> key;
    for (std::size_t i = 0; i < t.classes.size(); ++i) {
      Cyclotomic omega = t.chars[c][i].scaled(Rational(static_cast<long long>(t.classes[i].size()), deg));
      if (!omega.is_integral())
        throw InternalError("block_partition: central character value is not integral (" + omega.to_string() + ")");
      key.push_back(emb.reduce(omega));
    }
    auto [it, fresh] = key_to_block.emplace(key, p.blocks.size());
    if (fresh) {
      p.blocks.emplace_back();
      p.defect.push_back(0);
    }
    p.blocks[it->second].push_back(c);
    p.defect[it->second] = std::max(p.defect[it->second], full - nu2(deg));
  }
  bool found = false;
  for (std::size_t c = 0; c < t.size() && !found; ++c) {
    bool trivial = true;
    for (const auto& v : t.chars[c])
      if (v != Cyclotomic(1)) {
        trivial = false;
        break;
      }
    if (!trivial) continue;
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
      for (auto x : p.blocks[b])
        if (x == c) p.principal = b;
    found = true;
  }
  if (!found) throw InternalError("block_partition: no trivial character");
  return p;
}

std::size_t defect_zero_count(const CharacterTable& t) {
  const int full = nu2(static_cast<long long>(t.group_order()));
  std::size_t count = 0;
  for (auto d : t.degrees())
    if (nu2(d) == full) ++count;
  return count;
}

BlockInvariants principal_block_invariants(const BlockPartition& p, const CharacterTable& t, std::size_t sylow_order) {
  const GroupTable& g = *t.group;
  const int index = nu2(static_cast<long long>(g.order())) - nu2(static_cast<long long>(sylow_order));
  BlockInvariants inv;
  for (auto c : p.blocks.at(p.principal)) {
    ++inv.k;
    ++inv.k_height[nu2(t.degree(c)) - index];
  }
  inv.k0 = inv.k_height.count(0) ? inv.k_height.at(0) : 0;
  inv.k1 = inv.k_height.count(1) ? inv.k_height.at(1) : 0;

  Subgroup sylow = o2(g);
  if (sylow.order() != sylow_order)
    throw std::domain_error("principal_block_invariants: l(B) needs a normal Sylow 2-subgroup");
  if (p.blocks.size() != 1)
    throw std::domain_error("principal_block_invariants: l(B) is only supported for a single block");
  inv.l = static_cast<long long>(two_regular_class_count(g));
  Subgroup c = centralizer(g, sylow);
  std::vector<Index> gens = sylow.elements;
  gens.insert(gens.end(), c.elements.begin(), c.elements.end());
  inv.e = static_cast<long long>(g.order() / generate(g, gens).order());
  return inv;
}

GroupPtr semidirect_witness(const GroupParams& params, std::size_t alpha_index) {
  auto d = make_group(params);
  AutomorphismQuery q;
  q.order = 3;
  auto autos = automorphism_search(d, q);
  if (autos.empty())
    throw std::invalid_argument("semidirect_witness: D(" + std::to_string(params.n) + "," +
                                std::to_string(params.m) + ") has no automorphism of order 3");
  return semidirect_product(d, autos.at(alpha_index % autos.size()));
}

WitnessReport run_witness(const std::string& kind, const GroupParams& params) {
  GroupPtr g;
  if (kind == "semidirect") g = semidirect_witness(params);
  else if (kind == "nilpotent") g = make_group(params);
  else throw std::invalid_argument("run_witness: unknown witness kind '" + kind + "'");
  WitnessReport r;
  r.kind = kind;
  r.table = dixon_table(g);
  r.partition = block_partition(r.table);
  r.invariants = principal_block_invariants(r.partition, r.table, static_cast<std::size_t>(params.order()));
  return r;
}

}  // namespace blocklab
