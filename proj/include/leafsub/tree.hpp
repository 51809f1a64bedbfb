#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leafsub {

/// Root-to-leaf path of child indices. The root itself is the empty path.
using LeafPosition = std::vector<std::size_t>;

/**
 * Unlabeled rooted tree held by value. Leaves may carry a text label for
 * interchange; labels never take part in isomorphism.
 */
class RootedTree {
 public:
  /// The single vertex.
  RootedTree() = default;

  /// Internal vertex over the given children. An empty list yields a leaf.
  explicit RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {}

  static RootedTree leaf(std::optional<std::string> label = std::nullopt) {
    RootedTree t;
    t.label_ = std::move(label);
    return t;
  }

  bool is_leaf() const noexcept { return children_.empty(); }
  std::size_t outdegree() const noexcept { return children_.size(); }
  const std::vector<RootedTree>& children() const noexcept { return children_; }
  const std::optional<std::string>& label() const noexcept { return label_; }

 private:
  std::vector<RootedTree> children_;
  std::optional<std::string> label_;
};

/**
 * Sorted nested-parenthesis encoding of an isomorphism class. A leaf encodes
 * as "()", an internal vertex as "(" followed by its children's codes in
 * increasing byte order, then ")".
 *
 * Ordering is by leaf count first, then by code bytes.
 */
struct CanonicalCode {
  std::string code = "()";
  std::size_t leaf_count = 1;
  std::size_t height = 0;

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) noexcept {
    return a.code == b.code;
  }
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) noexcept {
    if (auto c = a.leaf_count <=> b.leaf_count; c != 0) return c;
    return a.code.compare(b.code) <=> 0;
  }
};

CanonicalCode single_vertex_code();

/// Code of a root whose branches have the given classes (any order).
CanonicalCode join_codes(std::vector<const CanonicalCode*> branches);
CanonicalCode join_codes(const std::vector<CanonicalCode>& branches);

CanonicalCode canonical_code(const RootedTree& t);

/// Rebuilds an unlabeled representative from a code. Throws InvalidArgument on malformed input.
RootedTree tree_from_code(std::string_view code);

inline bool isomorphic(const RootedTree& a, const RootedTree& b) {
  return canonical_code(a) == canonical_code(b);
}

/// True iff no vertex, root included, has exactly one child.
bool is_topological(const RootedTree& t);

std::size_t leaf_count(const RootedTree& t);
std::size_t height(const RootedTree& t);
std::size_t vertex_count(const RootedTree& t);

/// Leaf positions in depth-first, left-to-right order.
std::vector<LeafPosition> leaves(const RootedTree& t);

/// Subtree rooted at `path`. Throws InvalidArgument if the path leaves the tree.
const RootedTree& subtree_at(const RootedTree& t, const LeafPosition& path);

// Named families. Leaves precede the internal child in caterpillars.
RootedTree star(std::size_t n);
RootedTree binary_caterpillar(std::size_t n);
RootedTree dary_caterpillar(long d, long n);
RootedTree complete_dary(long d, long h);

}  // namespace leafsub
