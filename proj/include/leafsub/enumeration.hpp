#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leafsub/formulas.hpp"
#include "leafsub/induced_set.hpp"
#include "leafsub/tree.hpp"

namespace leafsub {

struct EnumerationOptions {
  /// Cap on the number of candidate codes produced across the whole computation.
  std::size_t code_budget = 10'000'000;
  /// Reuse class sets of isomorphic subtrees.
  bool memoize = true;
};

/**
 * All isomorphism classes of leaf-induced subtrees of a topological tree,
 * computed bottom-up.
 *
 * A class either lives entirely inside one child's subtree or is rooted at
 * `t`; in the latter case it is the join of one class from each of r >= 2
 * distinct children. Isomorphic children are grouped so that each group
 * contributes a multiset of classes, and joins are deduplicated by code.
 *
 * Throws InvalidArgument for non-topological input and ResourceLimit when
 * the code budget would be exceeded.
 */
InducedSet induced_set(const RootedTree& t, const EnumerationOptions& options = {});

enum class CountMethod { automatic, enumerate, brute_force, formula };

std::string to_string(CountMethod m);
CountMethod parse_count_method(const std::string& s);

struct MethodCount {
  CountMethod method;
  BigCount value;
};

struct CountReport {
  BigCount value;
  std::vector<MethodCount> runs;
  std::optional<FamilyMatch> family;
  bool agree = true;
};

struct CountOptions {
  CountMethod method = CountMethod::automatic;
  EnumerationOptions enumeration;
  std::size_t brute_force_cap = 20;
  unsigned threads = 1;
};

/**
 * N(T) by the requested method. `automatic` uses the family formula when `t`
 * is a recognized family member and enumeration otherwise; when both are
 * feasible both run and `agree` records whether they match.
 */
CountReport count_report(const RootedTree& t, const CountOptions& options = {});

inline BigCount count(const RootedTree& t) { return count_report(t).value; }

}  // namespace leafsub
