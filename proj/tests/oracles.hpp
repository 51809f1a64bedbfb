#pragma once

// Test-only reference routines. None of these go through canonical codes or
// the bottom-up enumeration, so they can check those paths independently.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "leafsub/tree.hpp"

namespace leafsub::oracle {

/// Series-reduced rooted trees by leaf count, from counting alone:
/// a(1) = 1 and, for n >= 2, a(n) = number of multisets of at least two
/// smaller trees with leaf total n.
inline std::vector<std::uint64_t> series_reduced_counts(std::size_t n_max) {
  std::vector<std::uint64_t> a(n_max + 1, 0);
  if (n_max >= 1) a[1] = 1;
  for (std::size_t n = 2; n <= n_max; ++n) {
    // ways[s] = multisets of trees with sizes < n and leaf total s
    std::vector<std::uint64_t> ways(n + 1, 0);
    ways[0] = 1;
    for (std::size_t size = 1; size < n; ++size) {
      std::vector<std::uint64_t> next(n + 1, 0);
      for (std::size_t s = 0; s <= n; ++s) {
        if (!ways[s]) continue;
        // choose m trees of this size with repetition: binom(a + m - 1, m)
        std::uint64_t choose = 1;
        for (std::size_t m = 0; s + m * size <= n; ++m) {
          if (m > 0) choose = choose * (a[size] + m - 1) / m;
          next[s + m * size] += ways[s] * choose;
        }
      }
      ways = std::move(next);
    }
    a[n] = ways[n];  // a single part would need size n, excluded above
  }
  return a;
}

/// Isomorphism by recursive backtracking over child matchings.
inline bool brute_isomorphic(const RootedTree& a, const RootedTree& b) {
  if (a.outdegree() != b.outdegree()) return false;
  if (a.is_leaf()) return true;
  const std::size_t m = a.outdegree();
  std::vector<bool> used(m, false);
  std::function<bool(std::size_t)> match = [&](std::size_t i) {
    if (i == m) return true;
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j] || !brute_isomorphic(a.children()[i], b.children()[j])) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(0);
}

/// Random topological tree with n leaves and root outdegree at most max_degree.
inline RootedTree random_topological(std::mt19937_64& rng, std::size_t n, std::size_t max_degree = 4) {
  if (n == 1) return RootedTree{};
  std::uniform_int_distribution<std::size_t> deg(2, std::min(n, max_degree));
  const std::size_t k = deg(rng);
  // random composition of n into k positive parts
  std::vector<std::size_t> cuts;
  for (std::size_t i = 1; i < n; ++i) cuts.push_back(i);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<RootedTree> kids;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    kids.push_back(random_topological(rng, c - prev, max_degree));
    prev = c;
  }
  kids.push_back(random_topological(rng, n - prev, max_degree));
  return RootedTree(std::move(kids));
}

/// Same tree with the children of every vertex permuted at random.
inline RootedTree shuffled(const RootedTree& t, std::mt19937_64& rng) {
  if (t.is_leaf()) return t;
  std::vector<RootedTree> kids;
  for (const auto& c : t.children()) kids.push_back(shuffled(c, rng));
  std::shuffle(kids.begin(), kids.end(), rng);
  return RootedTree(std::move(kids));
}

/// Copy of `t` whose leaves are labeled L0, L1, ... left to right.
inline RootedTree labeled(const RootedTree& t) {
  std::size_t next = 0;
  std::function<RootedTree(const RootedTree&)> go = [&](const RootedTree& n) {
    if (n.is_leaf()) return RootedTree::leaf("L" + std::to_string(next++));
    std::vector<RootedTree> kids;
    for (const auto& c : n.children()) kids.push_back(go(c));
    return RootedTree(std::move(kids));
  };
  return go(t);
}

inline RootedTree node(std::vector<RootedTree> kids) { return RootedTree(std::move(kids)); }
inline RootedTree leaf(const char* label = nullptr) {
  return label ? RootedTree::leaf(std::string(label)) : RootedTree::leaf();
}
inline RootedTree cherry() { return node({leaf(), leaf()}); }

}  // namespace leafsub::oracle
