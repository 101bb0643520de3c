#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace blocklab {

using Index = std::uint32_t;

/// Parameters of D(n,m) = D_{2^n} * C_{2^m}; the constructor enforces
/// n >= 3 and m >= 2.
struct GroupParams {
  int n;
  int m;

  GroupParams(int n, int m);
  long order() const { return 1L << (n + m - 1); }
};

/// x^i y^j z^k in normal form: 0 <= i < 2^{n-2}, j in {0,1}, 0 <= k < 2^m.
struct FamilyElement {
  long i = 0;
  int j = 0;
  long k = 0;

  friend bool operator==(const FamilyElement&, const FamilyElement&) = default;
};

/// Normal-form arithmetic for D(n,m) with the identification
/// x^{2^{n-2}} = z^{2^{m-1}} absorbed into the z exponent.
class FamilyArithmetic {
 public:
  explicit FamilyArithmetic(GroupParams params) : p_(params) {}

  const GroupParams& params() const { return p_; }
  FamilyElement normalize(long i, long j, long k) const;
  FamilyElement multiply(const FamilyElement& a, const FamilyElement& b) const;
  FamilyElement inverse(const FamilyElement& a) const;

  Index index(const FamilyElement& e) const;
  FamilyElement element(Index idx) const;

  FamilyElement x() const { return normalize(1, 0, 0); }
  FamilyElement y() const { return normalize(0, 1, 0); }
  FamilyElement z() const { return normalize(0, 0, 1); }

 private:
  GroupParams p_;
};

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

/// How a table was built; drives JSON serialization.
struct GroupDescriptor {
  std::string family;  // "D*C", "semidirect", "subgroup", "quotient", "permutation", "cyclic"
  int n = 0;
  int m = 0;
  GroupPtr base;
  std::vector<Index> automorphism_images;
};

/// A finite group on the index set {0, ..., order-1}; index 0 is the identity
/// and index order is the canonical element order.
class GroupTable {
 public:
  using MulFn = std::function<Index(Index, Index)>;

  GroupTable(std::size_t order, MulFn mul, std::vector<std::vector<long>> coords,
             GroupDescriptor descriptor, std::vector<Index> generators = {});

  std::size_t order() const { return order_; }
  Index identity() const { return 0; }
  Index mul(Index a, Index b) const { return dense_.empty() ? mul_(a, b) : dense_[a * order_ + b]; }
  Index inv(Index a) const { return inv_[a]; }
  /// g a g^{-1}
  Index conj(Index g, Index a) const { return mul(mul(g, a), inv(g)); }
  Index pow(Index a, long long e) const;
  std::size_t element_order(Index a) const { return orders_[a]; }
  std::size_t exponent() const;
  bool is_abelian() const;

  const std::vector<Index>& generators() const { return gens_; }
  const std::vector<long>& coords(Index a) const { return coords_[a]; }
  std::string label(Index a) const;
  const GroupDescriptor& descriptor() const { return descriptor_; }

  /// Random associativity spot check.
  bool check_associativity(std::mt19937_64& rng, int samples) const;

 private:
  std::size_t order_;
  MulFn mul_;
  std::vector<Index> dense_;
  std::vector<Index> inv_;
  std::vector<std::size_t> orders_;
  std::vector<std::vector<long>> coords_;
  GroupDescriptor descriptor_;
  std::vector<Index> gens_;
};

/// A subgroup stored as a sorted element list plus generator witnesses.
struct Subgroup {
  std::vector<Index> elements;
  std::vector<Index> generators;

  bool contains(Index a) const;
  bool contains(const Subgroup& other) const;
  std::size_t order() const { return elements.size(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; }
};

struct ConjugacyClass {
  Index representative;
  std::vector<Index> elements;  // sorted
  std::size_t size() const { return elements.size(); }
};

/// Largest group on which class enumeration is attempted.
inline constexpr std::size_t kMaxClassOrder = 1u << 13;

GroupPtr make_group(const GroupParams& params);
GroupPtr cyclic_group(std::size_t k);
/// Permutation group on {0..degree-1} generated by the given images.
GroupPtr permutation_group(std::size_t degree, const std::vector<std::vector<Index>>& generators);
GroupPtr symmetric_group(std::size_t degree);

/// Index of the family element in a make_group table.
Index family_index(const GroupTable& g, const FamilyElement& e);

Subgroup generate(const GroupTable& g, std::vector<Index> gens);
Subgroup whole_group(const GroupTable& g);
Subgroup trivial_subgroup();
Subgroup center(const GroupTable& g);
Subgroup derived_subgroup(const GroupTable& g);
Subgroup centralizer(const GroupTable& g, Index e);
Subgroup centralizer(const GroupTable& g, const Subgroup& s);
Subgroup normalizer(const GroupTable& g, const Subgroup& s);
Subgroup conjugate(const GroupTable& g, const Subgroup& s, Index by);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
bool is_normal(const GroupTable& g, const Subgroup& s);
/// Largest normal 2-subgroup.
Subgroup o2(const GroupTable& g);
/// Elements of odd order.
std::size_t two_regular_class_count(const GroupTable& g);

std::vector<ConjugacyClass> conjugacy_classes(const GroupTable& g);
/// class_of[e] = position of e's class in conjugacy_classes(g).
std::vector<std::size_t> class_lookup(const GroupTable& g, const std::vector<ConjugacyClass>& classes);

/// Table of a subgroup; element i of the result is s.elements[i].
GroupPtr subgroup_table(const GroupPtr& g, const Subgroup& s);
/// Quotient by a normal subgroup; cosets ordered by least representative.
GroupPtr quotient_table(const GroupPtr& g, const Subgroup& normal);

/// All subgroups isomorphic to D_8 * C_{2^m} (the group D(3,m)), found by
/// searching generator triples satisfying its defining relations.
std::vector<Subgroup> subgroups_isomorphic_to_d8cm(const GroupTable& g, int m);
/// Orbits of a set of subgroups under conjugation by g.
std::vector<std::vector<Subgroup>> subgroup_classes(const GroupTable& g, const std::vector<Subgroup>& subgroups);

/// Homomorphism determined by images of the domain's generators.
struct GroupMap {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<Index> generator_images;
  std::vector<Index> map;

  Index operator()(Index a) const { return map[a]; }
  bool is_bijective() const;
  /// Order as a permutation (domain == codomain).
  std::size_t order() const;
  GroupMap compose(const GroupMap& inner) const;  // this o inner
  GroupMap inverse() const;
};

/// Extends generator images to a homomorphism, or nullopt when the images do
/// not satisfy the domain's relations.
std::optional<GroupMap> extend_homomorphism(const GroupPtr& domain, const GroupPtr& codomain,
                                            const std::vector<Index>& generator_images);
GroupMap identity_map(const GroupPtr& g);

struct AutomorphismQuery {
  std::optional<std::size_t> order;
  std::optional<Subgroup> fixed_points;
  std::size_t max_candidates = std::size_t{1} << 24;
  std::size_t max_group_order = 128;
};

/// Exhaustive search over images of the generating set, pruned by element
/// order. Results are in lexicographic order of generator images.
std::vector<GroupMap> automorphism_search(const GroupPtr& g, const AutomorphismQuery& query = {});

/// g x| C_t for an automorphism a of order t: (e1,c1)(e2,c2) = (e1 a^{c1}(e2), c1+c2).
GroupPtr semidirect_product(const GroupPtr& g, const GroupMap& a);

}  // namespace blocklab
