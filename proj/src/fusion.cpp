#include "blocklab/fusion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "blocklab/errors.hpp"

namespace blocklab {

namespace {

Index position(const Subgroup& s, Index e) {
  auto it = std::lower_bound(s.elements.begin(), s.elements.end(), e);
  if (it == s.elements.end() || *it != e) throw InternalError("element is not in the subgroup");
  return static_cast<Index>(it - s.elements.begin());
}

Subgroup image_subgroup(const std::vector<Index>& elems, const std::vector<Index>& gens) {
  Subgroup out{elems, gens};
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

// Order-3 automorphisms of Q fixing <z>, kept when <Aut_D(Q), alpha> has
// Aut_D(Q) as a Sylow 2-subgroup.
std::vector<LocalAutomorphism> find_alphas(const GroupPtr& d, const Subgroup& q, Index z) {
  auto table = subgroup_table(d, q);
  AutomorphismQuery query;
  query.order = 3;
  query.fixed_points = generate(*table, {position(q, z)});
  auto autos = automorphism_search(table, query);

  Subgroup n = normalizer(*d, q);
  std::vector<std::vector<Index>> aut_d;
  for (Index g : n.generators) {
    std::vector<Index> perm(q.order());
    for (std::size_t i = 0; i < q.order(); ++i) perm[i] = position(q, d->conj(g, q.elements[i]));
    aut_d.push_back(std::move(perm));
  }
  const std::size_t two_part = permutation_group(q.order(), aut_d)->order();

  std::vector<LocalAutomorphism> out;
  for (const auto& a : autos) {
    auto perms = aut_d;
    perms.push_back(a.map);
    if (permutation_group(q.order(), perms)->order() != 3 * two_part) continue;
    LocalAutomorphism la{q, std::vector<Index>(d->order(), LocalAutomorphism::kNoImage)};
    for (std::size_t i = 0; i < q.order(); ++i) la.map[q.elements[i]] = q.elements[a.map[i]];
    out.push_back(std::move(la));
  }
  return out;
}

struct UnionFind {
  std::vector<Index> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Index{0}); }
  Index find(Index a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

FusionCase parse_case(const std::string& s) {
  if (s == "aa") return FusionCase::aa;
  if (s == "ab" || s == "ba") return FusionCase::ab;
  if (s == "bb") return FusionCase::bb;
  throw std::invalid_argument("unknown fusion case '" + s + "' (expected aa, ab or bb)");
}

std::string to_string(FusionCase c) {
  switch (c) {
    case FusionCase::aa: return "aa";
    case FusionCase::ab: return "ab";
    case FusionCase::bb: return "bb";
  }
  return "?";
}

bool case_valid(FusionCase c, int n) { return c != FusionCase::ab || n >= 4; }

std::vector<FusionCase> valid_cases(int n) {
  std::vector<FusionCase> out;
  for (auto c : {FusionCase::aa, FusionCase::ab, FusionCase::bb})
    if (case_valid(c, n)) out.push_back(c);
  return out;
}

long long major_l_value(FusionCase c) {
  switch (c) {
    case FusionCase::aa: return 3;
    case FusionCase::ab: return 2;
    case FusionCase::bb: return 1;
  }
  return 0;
}

std::size_t alpha_candidate_count(const GroupPtr& d, const Subgroup& q) {
  FamilyArithmetic arith(GroupParams(d->descriptor().n, d->descriptor().m));
  return find_alphas(d, q, arith.index(arith.z())).size();
}

FusionSystem build_fusion(const GroupParams& params, FusionCase c, std::size_t alpha_index) {
  if (!case_valid(c, params.n))
    throw std::invalid_argument("case " + to_string(c) + " needs n >= 4 (got n = " + std::to_string(params.n) + ")");
  FusionSystem fs{params, c, make_group(params), {}, {}, {}};
  FamilyArithmetic arith(params);
  const GroupTable& d = *fs.group;
  Index x = arith.index(arith.x()), y = arith.index(arith.y()), z = arith.index(arith.z());
  if (params.n == 3) {
    fs.q1 = whole_group(d);
    fs.q1.generators = {x, y, z};
    fs.q2 = fs.q1;
  } else {
    Index a = d.pow(x, 1LL << (params.n - 3));
    Index xy = d.mul(x, y);
    fs.q1 = generate(d, {a, y, z});
    fs.q1.generators = {a, y, z};
    fs.q2 = generate(d, {a, xy, z});
    fs.q2.generators = {a, xy, z};
  }
  std::vector<const Subgroup*> equipped;
  if (c == FusionCase::aa) {
    equipped.push_back(&fs.q1);
    if (params.n >= 4) equipped.push_back(&fs.q2);
  } else if (c == FusionCase::ab) {
    equipped.push_back(&fs.q2);
  }
  for (const Subgroup* q : equipped) {
    auto cands = find_alphas(fs.group, *q, z);
    if (cands.empty()) throw InternalError("build_fusion: no order-3 automorphism with the required outer structure");
    fs.alphas.push_back(cands[alpha_index % cands.size()]);
  }
  return fs;
}

std::vector<std::vector<Index>> f_classes(const FusionSystem& fs) {
  const GroupTable& d = *fs.group;
  UnionFind uf(d.order());
  for (Index e = 0; e < d.order(); ++e) {
    for (Index g : d.generators()) uf.unite(e, d.conj(g, e));
    for (const auto& a : fs.alphas)
      if (a.map[e] != LocalAutomorphism::kNoImage) uf.unite(e, a.map[e]);
  }
  std::map<Index, std::vector<Index>> groups;
  for (Index e = 0; e < d.order(); ++e) groups[uf.find(e)].push_back(e);
  std::vector<std::vector<Index>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

bool fully_normalized(const FusionSystem& fs, Index u, const std::vector<Index>& f_class) {
  const GroupTable& d = *fs.group;
  std::size_t own = normalizer(d, generate(d, {u})).order();
  for (Index v : f_class)
    if (normalizer(d, generate(d, {v})).order() > own) return false;
  return true;
}

std::vector<Subsection> subsection_reps(const FusionSystem& fs, long long trivial_l) {
  const GroupTable& d = *fs.group;
  Subgroup zd = center(d);
  std::vector<Subsection> out;
  for (const auto& cls : f_classes(fs)) {
    Index best = cls.front();
    std::size_t best_size = 0;
    for (Index v : cls) {
      std::size_t sz = normalizer(d, generate(d, {v})).order();
      if (sz > best_size) {
        best = v;
        best_size = sz;
      }
    }
    Subsection s{best, centralizer(d, best), zd.contains(best), 1};
    if (best == d.identity()) s.l = trivial_l;
    else if (s.major) s.l = major_l_value(fs.fcase);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Subgroup> f_conjugates(const FusionSystem& fs, const Subgroup& s) {
  const GroupTable& d = *fs.group;
  std::set<Subgroup> seen{s};
  std::vector<Subgroup> todo{s};
  while (!todo.empty()) {
    Subgroup cur = std::move(todo.back());
    todo.pop_back();
    std::vector<Subgroup> next;
    for (Index g : d.generators()) next.push_back(conjugate(d, cur, g));
    for (const auto& a : fs.alphas) {
      if (!a.domain.contains(cur)) continue;
      std::vector<Index> elems, gens;
      for (Index e : cur.elements) elems.push_back(a.map[e]);
      for (Index e : cur.generators) gens.push_back(a.map[e]);
      next.push_back(image_subgroup(elems, gens));
    }
    for (auto& t : next)
      if (seen.insert(t).second) todo.push_back(std::move(t));
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<Subgroup>> f_centric_subgroups(const FusionSystem& fs) {
  const GroupTable& d = *fs.group;
  Subgroup zd = center(d);
  std::vector<Index> reps;
  for (Index e = 0; e < d.order(); ++e) {
    bool least = true;
    for (Index c : zd.elements)
      if (d.mul(e, c) < e) {
        least = false;
        break;
      }
    if (least) reps.push_back(e);
  }
  std::set<Subgroup> subs;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j) {
      std::vector<Index> gens = zd.generators;
      gens.push_back(reps[i]);
      gens.push_back(reps[j]);
      subs.insert(generate(d, gens));
    }
  std::set<Subgroup> assigned;
  std::vector<std::vector<Subgroup>> out;
  for (const auto& s : subs) {
    if (assigned.count(s)) continue;
    auto orbit = f_conjugates(fs, s);
    assigned.insert(orbit.begin(), orbit.end());
    bool centric = true;
    for (const auto& t : orbit)
      if (!t.contains(centralizer(d, t))) {
        centric = false;
        break;
      }
    if (centric) out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.front().order() != b.front().order()) return a.front().order() < b.front().order();
    return a.front() < b.front();
  });
  return out;
}

std::vector<std::vector<Index>> f_homs(const FusionSystem& fs, const Subgroup& s) {
  const GroupTable& d = *fs.group;
  std::set<std::vector<Index>> seen{s.elements};
  std::vector<std::vector<Index>> todo{s.elements};
  while (!todo.empty()) {
    auto cur = std::move(todo.back());
    todo.pop_back();
    std::vector<std::vector<Index>> next;
    for (Index g : d.generators()) {
      std::vector<Index> img(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) img[i] = d.conj(g, cur[i]);
      next.push_back(std::move(img));
    }
    for (const auto& a : fs.alphas) {
      bool inside = true;
      for (Index e : cur)
        if (a.map[e] == LocalAutomorphism::kNoImage) {
          inside = false;
          break;
        }
      if (!inside) continue;
      std::vector<Index> img(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) img[i] = a.map[cur[i]];
      next.push_back(std::move(img));
    }
    for (auto& img : next)
      if (seen.insert(img).second) todo.push_back(std::move(img));
  }
  return {seen.begin(), seen.end()};
}

GroupPtr aut_f(const FusionSystem& fs, const std::vector<Subgroup>& chain) {
  if (chain.empty()) throw std::invalid_argument("aut_f: empty chain");
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!chain[i].contains(chain[i - 1]) || chain[i] == chain[i - 1])
      throw std::invalid_argument("aut_f: chain is not strictly ascending");
  const Subgroup& top = chain.back();
  std::vector<std::vector<Index>> perms;
  for (const auto& phi : f_homs(fs, top)) {
    std::vector<Index> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != top.elements) continue;
    bool keeps = true;
    for (std::size_t c = 0; c + 1 < chain.size() && keeps; ++c)
      for (Index e : chain[c].elements)
        if (!chain[c].contains(phi[position(top, e)])) {
          keeps = false;
          break;
        }
    if (!keeps) continue;
    std::vector<Index> perm(top.order());
    for (std::size_t i = 0; i < top.order(); ++i) perm[i] = position(top, phi[i]);
    perms.push_back(std::move(perm));
  }
  return permutation_group(top.order(), perms);
}

Subgroup inner_automorphisms(const FusionSystem& fs, const Subgroup& s, const GroupTable& aut) {
  const GroupTable& d = *fs.group;
  std::map<std::vector<long>, Index> lookup;
  for (Index a = 0; a < aut.order(); ++a) lookup[aut.coords(a)] = a;
  std::vector<Index> gens;
  for (Index q : s.elements) {
    std::vector<long> perm(s.order());
    for (std::size_t i = 0; i < s.order(); ++i) perm[i] = position(s, d.conj(q, s.elements[i]));
    auto it = lookup.find(perm);
    if (it == lookup.end()) throw InternalError("inner_automorphisms: inner automorphism missing from Aut_F");
    gens.push_back(it->second);
  }
  return generate(aut, gens);
}

Subgroup fixed_point_check(const FusionSystem& fs, const Subgroup& q) {
  const GroupTable& d = *fs.group;
  const LocalAutomorphism* alpha = nullptr;
  for (const auto& a : fs.alphas)
    if (a.domain == q) alpha = &a;
  if (!alpha) throw std::invalid_argument("fixed_point_check: Q carries no order-3 automorphism in this case");
  Subgroup n = normalizer(d, q);
  std::vector<Index> fixed;
  for (Index e : q.elements) {
    if (alpha->map[e] != e) continue;
    bool ok = true;
    for (Index g : n.generators)
      if (d.conj(g, e) != e) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(e);
  }
  return generate(d, fixed);
}

GroupPtr out_f(const FusionSystem& fs, const Subgroup& q) {
  auto aut = aut_f(fs, {q});
  return quotient_table(aut, inner_automorphisms(fs, q, *aut));
}

bool f_radical(const FusionSystem& fs, const Subgroup& q) {
  auto aut = aut_f(fs, {q});
  return o2(*aut) == inner_automorphisms(fs, q, *aut);
}

std::vector<std::vector<Subgroup>> centric_radical_classes(const FusionSystem& fs) {
  std::vector<std::vector<Subgroup>> out;
  for (auto& cls : f_centric_subgroups(fs))
    if (f_radical(fs, cls.front())) out.push_back(std::move(cls));
  return out;
}

}  // namespace blocklab
