#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blocklab/group.hpp"

namespace blocklab {

enum class FusionCase { aa, ab, bb };

FusionCase parse_case(const std::string& s);
std::string to_string(FusionCase c);
/// ab needs n >= 4; aa and bb are valid for every n >= 3.
bool case_valid(FusionCase c, int n);
std::vector<FusionCase> valid_cases(int n);
/// l-value of the dominated block at a nontrivial major subsection.
long long major_l_value(FusionCase c);

/// An automorphism of a subgroup Q of D, stored as a map on D's indices
/// (entries outside Q are kNoImage).
struct LocalAutomorphism {
  static constexpr Index kNoImage = ~Index{0};
  Subgroup domain;
  std::vector<Index> map;
  Index operator()(Index e) const { return map[e]; }
};

struct FusionSystem {
  GroupParams params;
  FusionCase fcase;
  GroupPtr group;
  Subgroup q1;  // <x^{2^{n-3}}, y, z>; D itself when n = 3
  Subgroup q2;  // <x^{2^{n-3}}, xy, z>
  std::vector<LocalAutomorphism> alphas;

  long long inertial_index() const { return (fcase == FusionCase::aa && params.n == 3) ? 3 : 1; }
};

/// alpha_index picks among the admissible order-3 automorphisms (wrapping),
/// so callers can check that results do not depend on the choice.
FusionSystem build_fusion(const GroupParams& params, FusionCase c, std::size_t alpha_index = 0);

/// Number of admissible order-3 automorphisms found on Q (sorted by images).
std::size_t alpha_candidate_count(const GroupPtr& d, const Subgroup& q);

/// F-conjugacy classes of elements, each sorted, ordered by least element.
std::vector<std::vector<Index>> f_classes(const FusionSystem& fs);

struct Subsection {
  Index u;
  Subgroup defect_group;  // C_D(u)
  bool major;
  long long l;
};

/// One subsection per F-class, u chosen with |N_D(<u>)| maximal (least index
/// on ties). The trivial subsection carries trivial_l.
std::vector<Subsection> subsection_reps(const FusionSystem& fs, long long trivial_l);
bool fully_normalized(const FusionSystem& fs, Index u, const std::vector<Index>& f_class);

/// F-conjugates of a subgroup (closure under D-conjugation and the alphas).
std::vector<Subgroup> f_conjugates(const FusionSystem& fs, const Subgroup& s);

/// Classes of F-centric subgroups, each class sorted, ordered by (order, least member).
std::vector<std::vector<Subgroup>> f_centric_subgroups(const FusionSystem& fs);

/// All F-morphisms S -> D as maps on S.elements (position i -> image of
/// S.elements[i]).
std::vector<std::vector<Index>> f_homs(const FusionSystem& fs, const Subgroup& s);

/// Aut_F of a chain S_0 < ... < S_k: automorphisms of S_k in F that keep every
/// S_i, as a permutation group on the positions of S_k.elements.
GroupPtr aut_f(const FusionSystem& fs, const std::vector<Subgroup>& chain);

/// Inner automorphisms of S inside a table returned by aut_f for (S).
Subgroup inner_automorphisms(const FusionSystem& fs, const Subgroup& s, const GroupTable& aut);

/// Common fixed points in Q of N_D(Q)-conjugation and the alpha on Q.
Subgroup fixed_point_check(const FusionSystem& fs, const Subgroup& q);

/// Out_F(Q) = Aut_F(Q) / Inn(Q).
GroupPtr out_f(const FusionSystem& fs, const Subgroup& q);

/// Q is F-radical when Inn(Q) = O_2(Aut_F(Q)).
bool f_radical(const FusionSystem& fs, const Subgroup& q);

/// F-classes of F-centric F-radical subgroups.
std::vector<std::vector<Subgroup>> centric_radical_classes(const FusionSystem& fs);

}  // namespace blocklab
