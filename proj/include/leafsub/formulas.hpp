#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "leafsub/tree.hpp"

namespace leafsub {

/// Exact nonnegative integer; subtree counts grow doubly exponentially.
using BigCount = mpz_class;

/// Largest integer, in bits, the complete-tree recursion will produce.
inline constexpr std::size_t kDefaultMaxCountBits = std::size_t{1} << 26;

BigCount star_count(long n);
BigCount binary_caterpillar_count(long n);

/// ((d-1)^((n+d-2)/(d-1)) - 1) / (d-2) for the strict d-ary caterpillar with n leaves, d >= 3.
BigCount caterpillar_count(long d, long n);

/// 1 + (d-1) + ... + (d-1)^((n-1)/(d-1)), term by term.
BigCount caterpillar_count_geometric(long d, long n);

/// Exact binom(n, k); zero when n < k.
BigCount big_binomial(const BigCount& n, unsigned long k);

/**
 * N(C^d_0), ..., N(C^d_h) from N_0 = 1 and N_h = -N_{h-1} + binom(d + N_{h-1}, d).
 * Throws ResourceLimit before producing a value wider than `max_bits`.
 */
std::vector<BigCount> complete_dary_counts(long d, long h, std::size_t max_bits = kDefaultMaxCountBits);

BigCount complete_dary_count(long d, long h, std::size_t max_bits = kDefaultMaxCountBits);

enum class Family { star, binary_caterpillar, dary_caterpillar, complete_dary };

std::string to_string(Family f);

struct FamilyMatch {
  Family family;
  long d = 0;  // arity where meaningful
  long n = 0;  // leaf count
  long h = 0;  // height
};

/// Identifies `t` as a member of one of the named families, by isomorphism class.
std::optional<FamilyMatch> recognize_family(const RootedTree& t);

/// Closed-form or recursive count for a recognized family member.
BigCount family_count(const FamilyMatch& m);

}  // namespace leafsub
