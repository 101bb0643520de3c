#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blocklab/block_invariants.hpp"
#include "blocklab/chartab.hpp"

namespace blocklab {

/// GF(2^f) with f = ord_r(2), elements as bit masks of polynomials over GF(2).
class GF2Field {
 public:
  explicit GF2Field(int degree);

  int degree() const { return f_; }
  std::uint64_t size() const { return std::uint64_t{1} << f_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
  std::uint64_t multiplicative_order(std::uint64_t a) const;
  /// An element of multiplicative order 2^f - 1.
  std::uint64_t primitive_element() const;

 private:
  int f_;
  std::uint64_t modulus_;  // irreducible polynomial including the x^f term
};

/// Reduction Z[zeta_e] -> GF(2^f): zeta_{2^a} -> 1, zeta_e -> beta of order r.
class ModTwoEmbedding {
 public:
  /// choice selects among the generators of the order-r subgroup (0 = first).
  ModTwoEmbedding(long exponent, int choice = 0);

  long exponent() const { return e_; }
  long odd_part() const { return r_; }
  const GF2Field& field() const { return field_; }
  std::uint64_t beta() const { return beta_; }
  /// Image of an integral element whose conductor divides the exponent.
  std::uint64_t reduce(const Cyclotomic& c) const;

 private:
  long e_;
  long r_;
  GF2Field field_;
  std::uint64_t beta_;
};

struct BlockPartition {
  std::vector<std::vector<std::size_t>> blocks;  // character indices, blocks ordered by least member
  std::size_t principal = 0;
  std::vector<int> defect;  // per block: max character defect
};

BlockPartition block_partition(const CharacterTable& t, int embedding_choice = 0);

/// Number of characters of 2-defect zero.
std::size_t defect_zero_count(const CharacterTable& t);

/// Heights and counts of the principal block. l is only computed when there
/// is a single block and the Sylow 2-subgroup is normal.
BlockInvariants principal_block_invariants(const BlockPartition& p, const CharacterTable& t, std::size_t sylow_order);

/// D(n,m) x| C3 using the first order-3 automorphism found by search.
GroupPtr semidirect_witness(const GroupParams& params, std::size_t alpha_index = 0);

struct WitnessReport {
  std::string kind;
  CharacterTable table;
  BlockPartition partition;
  BlockInvariants invariants;
};

/// kind is "semidirect" (D x| C3, needs n = 3) or "nilpotent" (D itself).
WitnessReport run_witness(const std::string& kind, const GroupParams& params);

}  // namespace blocklab
