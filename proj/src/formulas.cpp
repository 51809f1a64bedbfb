#include "leafsub/formulas.hpp"

#include <algorithm>

#include "leafsub/errors.hpp"

namespace leafsub {

BigCount star_count(long n) {
  if (n < 1) throw InvalidArgument("star_count: n must be at least 1");
  return BigCount(n);
}

BigCount binary_caterpillar_count(long n) {
  if (n < 1) throw InvalidArgument("binary_caterpillar_count: n must be at least 1");
  return BigCount(n);
}

namespace {

long caterpillar_height(long d, long n, const char* who) {
  if (d == 2) {
    throw InvalidArgument(std::string(who) +
                          ": the closed form divides by d-2; use binary_caterpillar_count for d = 2");
  }
  if (d < 2) throw InvalidArgument(std::string(who) + ": d must be at least 3");
  if (n < 1) throw InvalidArgument(std::string(who) + ": n must be at least 1");
  if ((n - 1) % (d - 1) != 0) {
    throw InvalidArgument(std::string(who) + ": n must be 1 mod d-1");
  }
  return (n - 1) / (d - 1);
}

}  // namespace

BigCount caterpillar_count(long d, long n) {
  const long h = caterpillar_height(d, n, "caterpillar_count");
  // (n+d-2)/(d-1) == h+1
  BigCount p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d - 1), static_cast<unsigned long>(h + 1));
  BigCount out = (p - 1) / (d - 2);
  return out;
}

BigCount caterpillar_count_geometric(long d, long n) {
  const long h = caterpillar_height(d, n, "caterpillar_count_geometric");
  BigCount sum = 0, term = 1;
  for (long k = 0; k <= h; ++k) {
    sum += term;
    term *= d - 1;
  }
  return sum;
}

BigCount big_binomial(const BigCount& n, unsigned long k) {
  if (n < 0) throw InvalidArgument("big_binomial: n must be nonnegative");
  if (n < k) return 0;
  BigCount r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // r == binom(n, i + 1), exact
  }
  return r;
}

std::vector<BigCount> complete_dary_counts(long d, long h, std::size_t max_bits) {
  if (d < 2) throw InvalidArgument("complete_dary_count: d must be at least 2");
  if (h < 0) throw InvalidArgument("complete_dary_count: h must be nonnegative");
  std::vector<BigCount> seq;
  seq.reserve(static_cast<std::size_t>(h) + 1);
  seq.emplace_back(1);
  for (long k = 1; k <= h; ++k) {
    const BigCount& prev = seq.back();
    const std::size_t estimate = static_cast<std::size_t>(d) * mpz_sizeinbase(prev.get_mpz_t(), 2);
    if (estimate > max_bits) {
      throw ResourceLimit("complete_dary_count: N(C^" + std::to_string(d) + "_" + std::to_string(k) +
                          ") needs about " + std::to_string(estimate) + " bits, above the cap of " +
                          std::to_string(max_bits));
    }
    seq.push_back(big_binomial(prev + d, static_cast<unsigned long>(d)) - prev);
  }
  return seq;
}

BigCount complete_dary_count(long d, long h, std::size_t max_bits) {
  return complete_dary_counts(d, h, max_bits).back();
}

std::string to_string(Family f) {
  switch (f) {
    case Family::star: return "star";
    case Family::binary_caterpillar: return "bincat";
    case Family::dary_caterpillar: return "cat";
    case Family::complete_dary: return "complete";
  }
  return "?";
}

namespace {

bool all_leaves(const RootedTree& t) {
  return std::all_of(t.children().begin(), t.children().end(), [](const RootedTree& c) { return c.is_leaf(); });
}

// Every internal vertex has outdegree d.
bool strict(const RootedTree& t, std::size_t d) {
  if (t.is_leaf()) return true;
  if (t.outdegree() != d) return false;
  return std::all_of(t.children().begin(), t.children().end(), [d](const RootedTree& c) { return strict(c, d); });
}

// Internal vertices lie on one root-down path.
bool spine_only(const RootedTree& t) {
  const RootedTree* node = &t;
  while (!node->is_leaf()) {
    const RootedTree* next = nullptr;
    for (const auto& c : node->children()) {
      if (c.is_leaf()) continue;
      if (next) return false;
      next = &c;
    }
    if (!next) return true;
    node = next;
  }
  return true;
}

bool leaves_level(const RootedTree& t, std::size_t depth, std::size_t target) {
  if (t.is_leaf()) return depth == target;
  return std::all_of(t.children().begin(), t.children().end(),
                     [&](const RootedTree& c) { return leaves_level(c, depth + 1, target); });
}

}  // namespace

std::optional<FamilyMatch> recognize_family(const RootedTree& t) {
  const long n = static_cast<long>(leaf_count(t));
  const long h = static_cast<long>(height(t));
  if (t.is_leaf() || all_leaves(t)) {
    return FamilyMatch{Family::star, n > 1 ? n : 0, n, h};
  }
  const std::size_t d = t.outdegree();
  if (d < 2 || !strict(t, d)) return std::nullopt;
  if (d == 2 && spine_only(t)) return FamilyMatch{Family::binary_caterpillar, 2, n, h};
  if (leaves_level(t, 0, static_cast<std::size_t>(h))) {
    return FamilyMatch{Family::complete_dary, static_cast<long>(d), n, h};
  }
  if (spine_only(t)) return FamilyMatch{Family::dary_caterpillar, static_cast<long>(d), n, h};
  return std::nullopt;
}

BigCount family_count(const FamilyMatch& m) {
  switch (m.family) {
    case Family::star: return star_count(m.n);
    case Family::binary_caterpillar: return binary_caterpillar_count(m.n);
    case Family::dary_caterpillar: return caterpillar_count(m.d, m.n);
    case Family::complete_dary: return complete_dary_count(m.d, m.h);
  }
  throw InvalidArgument("unknown family");
}

}  // namespace leafsub
