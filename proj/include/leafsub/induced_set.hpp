#pragma once

#include <cstddef>
#include <set>

#include "leafsub/tree.hpp"

namespace leafsub {

/// Isomorphism classes of the leaf-induced subtrees of one host tree.
struct InducedSet {
  std::set<CanonicalCode> codes;
  CanonicalCode host_code;

  std::size_t size() const noexcept { return codes.size(); }
  bool contains(const CanonicalCode& c) const { return codes.count(c) != 0; }

  friend bool operator==(const InducedSet& a, const InducedSet& b) { return a.codes == b.codes; }
};

}  // namespace leafsub
