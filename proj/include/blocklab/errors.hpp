#pragma once

#include <stdexcept>
#include <string>

namespace blocklab {

/// A desk-scale guard refused the input (group too large, search space too big).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object failed one of its own consistency checks. Seeing this
/// means a bug, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Environment override for the character-table size guard.
std::size_t max_table_order();

}  // namespace blocklab
