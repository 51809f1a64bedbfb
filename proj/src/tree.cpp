#include "leafsub/tree.hpp"

#include <algorithm>
#include <string>

#include "leafsub/errors.hpp"

namespace leafsub {

namespace {

// Family constructors refuse to materialize more vertices than this.
constexpr std::size_t kMaxConstructedVertices = std::size_t{1} << 24;

std::size_t parse_code(std::string_view code, std::size_t pos, RootedTree& out) {
  if (pos >= code.size() || code[pos] != '(') {
    throw InvalidArgument("malformed canonical code at offset " + std::to_string(pos));
  }
  ++pos;
  std::vector<RootedTree> kids;
  while (pos < code.size() && code[pos] == '(') {
    RootedTree child;
    pos = parse_code(code, pos, child);
    kids.push_back(std::move(child));
  }
  if (pos >= code.size() || code[pos] != ')') {
    throw InvalidArgument("malformed canonical code at offset " + std::to_string(pos));
  }
  out = RootedTree(std::move(kids));
  return pos + 1;
}

}  // namespace

CanonicalCode single_vertex_code() { return CanonicalCode{}; }

CanonicalCode join_codes(std::vector<const CanonicalCode*> branches) {
  if (branches.empty()) return single_vertex_code();
  std::sort(branches.begin(), branches.end(),
            [](const CanonicalCode* a, const CanonicalCode* b) { return a->code < b->code; });
  CanonicalCode out;
  out.leaf_count = 0;
  out.height = 0;
  std::size_t length = 2;
  for (const auto* b : branches) length += b->code.size();
  out.code.clear();
  out.code.reserve(length);
  out.code.push_back('(');
  for (const auto* b : branches) {
    out.code += b->code;
    out.leaf_count += b->leaf_count;
    out.height = std::max(out.height, b->height + 1);
  }
  out.code.push_back(')');
  return out;
}

CanonicalCode join_codes(const std::vector<CanonicalCode>& branches) {
  std::vector<const CanonicalCode*> ptrs;
  ptrs.reserve(branches.size());
  for (const auto& b : branches) ptrs.push_back(&b);
  return join_codes(std::move(ptrs));
}

CanonicalCode canonical_code(const RootedTree& t) {
  if (t.is_leaf()) return single_vertex_code();
  std::vector<CanonicalCode> kids;
  kids.reserve(t.outdegree());
  for (const auto& c : t.children()) kids.push_back(canonical_code(c));
  return join_codes(kids);
}

RootedTree tree_from_code(std::string_view code) {
  RootedTree out;
  std::size_t end = parse_code(code, 0, out);
  if (end != code.size()) {
    throw InvalidArgument("trailing bytes in canonical code at offset " + std::to_string(end));
  }
  return out;
}

bool is_topological(const RootedTree& t) {
  if (t.outdegree() == 1) return false;
  return std::all_of(t.children().begin(), t.children().end(),
                     [](const RootedTree& c) { return is_topological(c); });
}

std::size_t leaf_count(const RootedTree& t) {
  if (t.is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : t.children()) n += leaf_count(c);
  return n;
}

std::size_t height(const RootedTree& t) {
  std::size_t h = 0;
  for (const auto& c : t.children()) h = std::max(h, height(c) + 1);
  return h;
}

std::size_t vertex_count(const RootedTree& t) {
  std::size_t n = 1;
  for (const auto& c : t.children()) n += vertex_count(c);
  return n;
}

namespace {

void collect_leaves(const RootedTree& t, LeafPosition& path, std::vector<LeafPosition>& out) {
  if (t.is_leaf()) {
    out.push_back(path);
    return;
  }
  for (std::size_t i = 0; i < t.outdegree(); ++i) {
    path.push_back(i);
    collect_leaves(t.children()[i], path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<LeafPosition> leaves(const RootedTree& t) {
  std::vector<LeafPosition> out;
  LeafPosition path;
  collect_leaves(t, path, out);
  return out;
}

const RootedTree& subtree_at(const RootedTree& t, const LeafPosition& path) {
  const RootedTree* node = &t;
  for (std::size_t i : path) {
    if (i >= node->outdegree()) throw InvalidArgument("position leaves the tree");
    node = &node->children()[i];
  }
  return *node;
}

RootedTree star(std::size_t n) {
  if (n == 0) throw InvalidArgument("star: n must be at least 1");
  if (n == 1) return RootedTree{};
  if (n + 1 > kMaxConstructedVertices) throw ResourceLimit("star: too many vertices");
  return RootedTree(std::vector<RootedTree>(n));
}

RootedTree binary_caterpillar(std::size_t n) {
  if (n == 0) throw InvalidArgument("binary_caterpillar: n must be at least 1");
  if (2 * n > kMaxConstructedVertices) throw ResourceLimit("binary_caterpillar: too many vertices");
  if (n == 1) return RootedTree{};
  // Built from the deepest cherry upwards.
  RootedTree t(std::vector<RootedTree>(2));
  for (std::size_t k = 3; k <= n; ++k) {
    std::vector<RootedTree> kids;
    kids.emplace_back();
    kids.push_back(std::move(t));
    t = RootedTree(std::move(kids));
  }
  return t;
}

RootedTree dary_caterpillar(long d, long n) {
  if (d < 2) throw InvalidArgument("dary_caterpillar: d must be at least 2");
  if (n < 1) throw InvalidArgument("dary_caterpillar: n must be at least 1");
  if ((n - 1) % (d - 1) != 0) {
    throw InvalidArgument("dary_caterpillar: no strict " + std::to_string(d) +
                          "-ary caterpillar has " + std::to_string(n) + " leaves (need n = 1 mod " +
                          std::to_string(d - 1) + ")");
  }
  if (static_cast<std::size_t>(n) * 2 > kMaxConstructedVertices) {
    throw ResourceLimit("dary_caterpillar: too many vertices");
  }
  const long levels = (n - 1) / (d - 1);
  if (levels == 0) return RootedTree{};
  RootedTree t(std::vector<RootedTree>(static_cast<std::size_t>(d)));
  for (long k = 1; k < levels; ++k) {
    std::vector<RootedTree> kids(static_cast<std::size_t>(d - 1));
    kids.push_back(std::move(t));
    t = RootedTree(std::move(kids));
  }
  return t;
}

RootedTree complete_dary(long d, long h) {
  if (d < 2) throw InvalidArgument("complete_dary: d must be at least 2");
  if (h < 0) throw InvalidArgument("complete_dary: h must be nonnegative");
  std::size_t total = 1, level = 1;
  for (long k = 0; k < h; ++k) {
    level *= static_cast<std::size_t>(d);
    total += level;
    if (total > kMaxConstructedVertices) throw ResourceLimit("complete_dary: too many vertices");
  }
  RootedTree t;
  for (long k = 0; k < h; ++k) {
    t = RootedTree(std::vector<RootedTree>(static_cast<std::size_t>(d), t));
  }
  return t;
}

}  // namespace leafsub
