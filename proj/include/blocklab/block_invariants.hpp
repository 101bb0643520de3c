#pragma once

#include <map>
#include <string>

namespace blocklab {

/// (k, k0, k1, k_{n-2}, l, e) of a block. k_height holds every height count;
/// kn2 is only meaningful when separate (n >= 4), for n = 3 it is folded into k1.
struct BlockInvariants {
  long long k = 0;
  long long k0 = 0;
  long long k1 = 0;
  long long kn2 = 0;
  long long l = 0;
  long long e = 1;
  bool separate_kn2 = false;
  std::map<int, long long> k_height;

  friend bool operator==(const BlockInvariants&, const BlockInvariants&) = default;
  std::string to_string() const;
};

}  // namespace blocklab
