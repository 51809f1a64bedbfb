#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>

#include "leafsub/induced_set.hpp"
#include "leafsub/tree.hpp"

namespace leafsub {

/// Nonempty set of leaf positions of some host tree.
class LeafSubset {
 public:
  explicit LeafSubset(std::set<LeafPosition> positions);

  /// Selects leaves[i] for every set bit i of `mask`.
  static LeafSubset from_mask(std::span<const LeafPosition> leaves, std::uint64_t mask);

  const std::set<LeafPosition>& positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }

 private:
  std::set<LeafPosition> positions_;
};

/// Most recent common ancestor of the subset, as a path from the root.
LeafPosition common_ancestor(const LeafSubset& s);

/**
 * Minimal subtree below the common ancestor that spans the selected leaves.
 * The result may contain vertices of outdegree one.
 */
RootedTree extract_spanning(const RootedTree& t, const LeafSubset& s);

/// Replaces every path through outdegree-one vertices by a single edge.
RootedTree contract_unary(const RootedTree& t);

/**
 * Subtree of `t` induced by the leaves in `s`: the spanning subtree below
 * their common ancestor with all outdegree-one vertices contracted. Labels of
 * the selected leaves are kept.
 *
 * Throws InvalidArgument if a position does not address a leaf of `t`.
 */
RootedTree induce(const RootedTree& t, const LeafSubset& s);

struct BruteForceOptions {
  std::size_t leaf_cap = 20;
  unsigned threads = 1;
};

struct BruteForceRun {
  InducedSet classes;
  std::uint64_t subsets = 0;
};

/// Applies induce() to all 2^n - 1 nonempty leaf subsets, in binary-counter order.
BruteForceRun brute_force_sweep(const RootedTree& t, const BruteForceOptions& options = {});

inline InducedSet brute_force_set(const RootedTree& t, const BruteForceOptions& options = {}) {
  return brute_force_sweep(t, options).classes;
}

}  // namespace leafsub
