#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blocklab/abelian.hpp"
#include "blocklab/fusion.hpp"

namespace blocklab {

/// A finite category given by its composition table.
struct Category {
  struct Morphism {
    std::size_t dom = 0;
    std::size_t cod = 0;
  };
  std::size_t objects = 0;
  std::vector<Morphism> morphisms;
  std::vector<std::size_t> identities;      // per object
  std::vector<std::vector<long>> compose;   // compose[b][a] = b o a, -1 when cod a != dom b

  /// Identities, domains of composites and associativity, checked exhaustively.
  bool verify(std::string* why = nullptr) const;
};

/// Z^s / span(relations); `relations` has s rows.
struct AbelianValue {
  IntMatrix relations;

  std::size_t generators() const { return relations.rows; }
  FiniteAbelian structure() const;
  static AbelianValue trivial();
  static AbelianValue cyclic(long long order);
};

/// A covariant functor: maps[a] sends values[dom a] to values[cod a].
struct CategoryModule {
  std::vector<AbelianValue> values;
  std::vector<IntMatrix> maps;

  bool functorial(const Category& cat, std::string* why = nullptr) const;
  bool all_trivial() const;
};

/// Derivations d(b o a) = M(b) d(a) + d(b) modulo inner derivations
/// a -> M(a) m_dom - m_cod, by exact lattice computation.
FiniteAbelian h1_category(const Category& cat, const CategoryModule& mod);

/// Limit: compatible families (m_a) with M(a) m_dom = m_cod.
FiniteAbelian h0_category(const Category& cat, const CategoryModule& mod);

/// Exhaustive oracle: counts all derivations and all inner derivations.
struct DerivationCount {
  BigInt derivations;
  BigInt inner;
};
DerivationCount h1_bruteforce(const Category& cat, const CategoryModule& mod, std::size_t max_candidates = 1u << 20);

/// Poset of F-classes of chains of F-centric subgroups, ordered by taking
/// subchains. Object representatives are canonical chains.
struct ChainCategory {
  Category cat;
  std::vector<std::vector<Subgroup>> chains;
  // per morphism: the subchain of chains[cod] used and the F-isomorphism from
  // its top onto the top of chains[dom] (positions of the subchain top -> D index)
  std::vector<std::vector<Subgroup>> witness_chain;
  std::vector<std::vector<Index>> witness_iso;
};

ChainCategory chain_category(const FusionSystem& fs);

/// Odd part of the Schur multiplier of Aut_F(sigma), looked up by group type.
struct SchurEntry {
  bool hit = false;
  std::string group;
  FiniteAbelian odd_multiplier;
};
SchurEntry schur_table(const GroupTable& g);

struct AValues {
  CategoryModule module;
  std::vector<std::string> names;      // per object, e.g. "C3"
  std::vector<std::string> misses;     // A^2 table misses
};

/// A^1 (odd abelianization as Hom(Aut_F(sigma), F^x)) or A^2 (table based).
AValues a_values(const FusionSystem& fs, const ChainCategory& cc, int i);

struct GluingReport {
  std::size_t objects = 0;
  std::size_t morphisms = 0;
  std::vector<std::string> a1, a2;
  FiniteAbelian h0_a2, h1_a1;
  bool category_ok = false;
  bool functorial = false;
  bool solver_used = false;
  std::vector<std::string> misses;

  bool pass() const;
  std::string to_string() const;
};

GluingReport gluing_check(const GroupParams& params, FusionCase c);

}  // namespace blocklab
