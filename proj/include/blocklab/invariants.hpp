#pragma once

#include <string>
#include <vector>

#include "blocklab/block_invariants.hpp"
#include "blocklab/fusion.hpp"

namespace blocklab {

/// Closed forms for k, k_i, l, e of a block with defect group D(n,m) in the
/// given fusion case. No range checks, so m = 1 can be evaluated too.
BlockInvariants theorem_formula(int n, int m, FusionCase c);

/// theorem_formula with parameter and case validation.
BlockInvariants theorem_main(const GroupParams& params, FusionCase c);

struct SubsectionSum {
  long long k_minus_l = 0;
  long long sum_l = 0;  // over nontrivial subsections
  std::size_t subsections = 0;
  bool ok() const { return k_minus_l == sum_l; }
};

SubsectionSum subsection_sum(const GroupParams& params, FusionCase c);
bool subsection_sum_check(const GroupParams& params, FusionCase c);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckLine> lines;
  bool pass() const;
  void add(std::string name, bool pass, std::string detail);
  std::string to_string() const;
};

/// k(B) <= |D|, k0 <= |D:D'|, k0 equal across cases and to the nilpotent
/// value, k0 < k.
Report conjecture_suite(const BlockInvariants& inv, const GroupParams& params);

/// Sum over F-centric F-radical classes of the number of defect-zero
/// characters of Out_F(Q).
long long alperin_weight_count(const FusionSystem& fs);

/// m = 1 in the closed forms against the quaternion invariants Q_{2^n}.
Report quaternion_formula_check(int n);

}  // namespace blocklab
