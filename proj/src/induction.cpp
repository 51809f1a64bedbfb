#include "leafsub/induction.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "leafsub/errors.hpp"

namespace leafsub {

LeafSubset::LeafSubset(std::set<LeafPosition> positions) : positions_(std::move(positions)) {
  if (positions_.empty()) throw InvalidArgument("leaf subset must be nonempty");
}

LeafSubset LeafSubset::from_mask(std::span<const LeafPosition> leaves, std::uint64_t mask) {
  std::set<LeafPosition> chosen;
  for (std::size_t i = 0; i < leaves.size() && i < 64; ++i) {
    if (mask & (std::uint64_t{1} << i)) chosen.insert(leaves[i]);
  }
  return LeafSubset(std::move(chosen));
}

LeafPosition common_ancestor(const LeafSubset& s) {
  // In lexicographic order the common prefix of the extremes is common to all.
  const auto& lo = *s.positions().begin();
  const auto& hi = *s.positions().rbegin();
  auto [lo_end, hi_end] = std::mismatch(lo.begin(), lo.end(), hi.begin(), hi.end());
  return LeafPosition(lo.begin(), lo_end);
}

namespace {

using PathIter = std::set<LeafPosition>::const_iterator;

RootedTree extract(const RootedTree& node, PathIter first, PathIter last, std::size_t depth) {
  if (node.is_leaf()) return RootedTree::leaf(node.label());
  std::vector<RootedTree> kids;
  while (first != last) {
    const std::size_t branch = (*first)[depth];
    PathIter group_end = std::find_if(first, last, [&](const LeafPosition& p) { return p[depth] != branch; });
    kids.push_back(extract(node.children()[branch], first, group_end, depth + 1));
    first = group_end;
  }
  return RootedTree(std::move(kids));
}

}  // namespace

RootedTree extract_spanning(const RootedTree& t, const LeafSubset& s) {
  for (const auto& p : s.positions()) {
    const RootedTree* node = &t;
    for (std::size_t i : p) {
      if (i >= node->outdegree()) throw InvalidArgument("leaf position outside the host tree");
      node = &node->children()[i];
    }
    if (!node->is_leaf()) throw InvalidArgument("position does not address a leaf");
  }
  const LeafPosition mrca = common_ancestor(s);
  return extract(subtree_at(t, mrca), s.positions().begin(), s.positions().end(), mrca.size());
}

RootedTree contract_unary(const RootedTree& t) {
  if (t.is_leaf()) return t;
  std::vector<RootedTree> kids;
  kids.reserve(t.outdegree());
  for (const auto& c : t.children()) kids.push_back(contract_unary(c));
  if (kids.size() == 1) return std::move(kids.front());
  return RootedTree(std::move(kids));
}

RootedTree induce(const RootedTree& t, const LeafSubset& s) {
  return contract_unary(extract_spanning(t, s));
}

BruteForceRun brute_force_sweep(const RootedTree& t, const BruteForceOptions& options) {
  const std::vector<LeafPosition> all = leaves(t);
  const std::size_t n = all.size();
  if (n > options.leaf_cap || n >= 63) {
    throw ResourceLimit("brute force: " + std::to_string(n) + " leaves exceeds the cap of " +
                        std::to_string(std::min<std::size_t>(options.leaf_cap, 62)));
  }
  const std::uint64_t end = std::uint64_t{1} << n;

  auto sweep = [&](std::uint64_t lo, std::uint64_t hi, std::set<CanonicalCode>& out) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      out.insert(canonical_code(induce(t, LeafSubset::from_mask(all, mask))));
    }
  };

  BruteForceRun run;
  run.classes.host_code = canonical_code(t);
  run.subsets = end - 1;
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, 64));
  if (workers == 1 || end < 1024) {
    sweep(1, end, run.classes.codes);
    return run;
  }
  std::vector<std::set<CanonicalCode>> partial(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (end - 1 + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = 1 + w * chunk;
    const std::uint64_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi, w] { sweep(lo, hi, partial[w]); });
  }
  for (auto& th : pool) th.join();
  for (auto& p : partial) run.classes.codes.merge(p);
  return run;
}

}  // namespace leafsub
