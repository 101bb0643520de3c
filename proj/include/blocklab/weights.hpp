#pragma once

#include <map>
#include <string>
#include <vector>

#include "blocklab/chartab.hpp"
#include "blocklab/fusion.hpp"

namespace blocklab {

/// One chain class 1 = X_0 < ... < X_k of 2-subgroups of Out_F(Q).
struct WeightChain {
  std::vector<Subgroup> chain;  // inside the outer group
  std::size_t stabilizer_order = 0;
  std::vector<std::size_t> orbit_sizes;             // orbits of I(sigma) on Irr^d(Q)
  std::vector<std::size_t> orbit_stabilizer_orders;  // |I(sigma, mu)| per orbit
  long long contribution = 0;                        // signed
};

struct WeightCell {
  int d = 0;
  long long w = 0;
  std::vector<WeightChain> chains;
};

/// Irr(Q), the outer group and its action, built once per Q.
class WeightContext {
 public:
  WeightContext(const FusionSystem& fs, const Subgroup& q);

  const GroupPtr& outer() const { return outer_; }
  const CharacterTable& characters() const { return table_; }
  /// Character permutation induced by an element of the outer group.
  const std::vector<std::size_t>& action(Index o) const { return action_[o]; }
  /// Defect nu2|Q| - nu2 mu(1) of each character.
  const std::vector<int>& defects() const { return defects_; }
  /// Chain classes of 2-subgroups starting at 1, up to conjugation in the outer group.
  const std::vector<std::vector<Subgroup>>& chains() const { return chains_; }

  WeightCell cell(int d) const;

 private:
  Subgroup q_;
  GroupPtr outer_;
  CharacterTable table_;
  std::vector<std::vector<std::size_t>> action_;
  std::vector<int> defects_;
  std::vector<std::vector<Subgroup>> chains_;
  mutable std::map<std::vector<Index>, std::size_t> z_cache_;

  std::size_t z_count(const Subgroup& s) const;
};

long long weight_sum(const FusionSystem& fs, const Subgroup& q, int d);

struct WeightLedger {
  GroupParams params;
  FusionCase fcase;
  std::vector<std::string> labels;           // one per F-centric F-radical class
  std::vector<std::vector<long long>> w;     // w[class][d], d in [0, n+m-1]
  std::vector<long long> target;             // k^d(B)
  bool pass() const;
  std::string to_string() const;
};

/// Defect classes of B from the main theorem: k^d(B) with d = n+m-1-h.
std::vector<long long> defect_counts(const GroupParams& params, FusionCase c);

WeightLedger owc_check(const GroupParams& params, FusionCase c, std::size_t alpha_index = 0);

/// "Q1", "Q2", "D" or "Q<order>".
std::string subgroup_label(const FusionSystem& fs, const Subgroup& q);

}  // namespace blocklab
