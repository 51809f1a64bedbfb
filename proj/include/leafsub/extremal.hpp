#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "leafsub/formulas.hpp"
#include "leafsub/tree.hpp"

namespace leafsub {

/// One representative per isomorphism class of topological trees with n leaves.
struct TreeCorpus {
  std::size_t n = 0;
  std::vector<RootedTree> trees;
  std::vector<CanonicalCode> codes;  // parallel to trees, increasing
};

inline constexpr std::size_t kDefaultCorpusCap = 10;

/**
 * Every topological tree with n leaves: the single vertex for n = 1, else each
 * root-join of a multiset of at least two smaller classes whose leaf counts
 * sum to n. Throws ResourceLimit above `cap`.
 */
TreeCorpus generate_topological(std::size_t n, std::size_t cap = kDefaultCorpusCap);

/// Corpora for 1..n_max, sharing the smaller ones.
std::vector<TreeCorpus> generate_corpora(std::size_t n_max, std::size_t cap = kDefaultCorpusCap);

struct Theorem1Report {
  std::size_t n = 0;
  std::size_t corpus_size = 0;
  BigCount minimum;
  std::vector<CanonicalCode> minimizers;
  std::map<BigCount, std::size_t> histogram;  // N(T) -> number of classes
  bool in_scope = false;  // n >= 5
  bool minimum_ok = false;
  bool minimizers_ok = false;
  std::vector<std::string> failures;

  bool pass() const { return minimum_ok && minimizers_ok; }
};

/**
 * Counts N(T) over the whole n-leaf corpus and checks that the minimum is n,
 * attained exactly by the star and the binary caterpillar. Values of n below
 * five are accepted and reported with `in_scope` false.
 */
Theorem1Report verify_theorem1(std::size_t n, std::size_t cap = kDefaultCorpusCap, unsigned threads = 1);

struct CaseWitnesses {
  int proof_case = 0;  // 1: some outdegree >= 3, 2: binary
  CanonicalCode first;
  CanonicalCode second;
};

/**
 * Locates the pair of same-size induced classes that separates `t` from the
 * extremal trees: S_3 and F^2_3 when some vertex has outdegree at least three,
 * C^2_2 and F^2_4 when `t` is binary.
 *
 * Throws PreconditionViolation unless `t` is topological with at least five
 * leaves and is neither a star nor a binary caterpillar; throws
 * VerificationFailure if the expected witnesses are missing.
 */
CaseWitnesses case_witnesses(const RootedTree& t);

}  // namespace leafsub
