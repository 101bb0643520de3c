#pragma once

#include <map>
#include <string>
#include <vector>

#include "blocklab/cyclotomic.hpp"
#include "blocklab/group.hpp"

namespace blocklab {

/// Ordinary character table. chars[c][i] is the value of character c on
/// classes[i]; class order follows conjugacy_classes(group).
struct CharacterTable {
  GroupPtr group;
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;
  std::vector<std::vector<Cyclotomic>> chars;

  std::size_t size() const { return chars.size(); }
  std::size_t group_order() const { return group->order(); }
  long long degree(std::size_t c) const;
  std::vector<long long> degrees() const;

  /// Both orthogonality relations and the degree identity; on failure the
  /// reason is written to *why.
  bool verify(std::string* why = nullptr) const;
  /// Class index of the inverse class.
  std::vector<std::size_t> inverse_classes() const;
};

/// Irr(D(n,m)) from Irr(D_{2^n}) x Irr(C_{2^m}) restricted to characters
/// trivial on the identified central involution.
CharacterTable family_table(const GroupParams& params);

/// Class-sum (Dixon) construction over a prime field. Guarded by
/// max_table_order().
CharacterTable dixon_table(const GroupPtr& g);

/// Characters sorted by (degree, values in the total order of
/// Cyclotomic::compare).
void sort_characters(CharacterTable& t);

/// True when the two tables have the same classes and equal multisets of
/// character vectors.
bool same_characters(const CharacterTable& a, const CharacterTable& b);

struct DefectData {
  std::vector<int> defect;
  std::vector<int> height;
  std::map<int, std::size_t> k_defect;  // d -> #chars of defect d
  std::map<int, std::size_t> k_height;  // h -> #chars of height h
};

/// Defect nu2|G| - nu2 chi(1), height nu2 chi(1) - nu2|G:P|.
DefectData defects_heights(const CharacterTable& t, std::size_t sylow_order);

std::string table_tsv(const CharacterTable& t);

}  // namespace blocklab
