#include "leafsub/newick.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "leafsub/errors.hpp"

namespace leafsub {

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RootedTree parse() {
    RootedTree t = subtree();
    skip_space();
    expect(';', "';' to end the tree");
    skip_space();
    if (pos_ != text_.size()) fail("end of input after ';'");
    return t;
  }

 private:
  RootedTree subtree() {
    skip_space();
    if (peek() == '(') {
      const std::size_t open = pos_;
      ++pos_;
      std::vector<RootedTree> kids;
      kids.push_back(subtree());
      skip_space();
      while (peek() == ',') {
        ++pos_;
        kids.push_back(subtree());
        skip_space();
      }
      expect(')', "',' or ')'");
      if (kids.size() == 1 && kids.front().is_leaf() && !kids.front().label()) {
        throw NewickSyntaxError(open, "empty subtree list '()'");
      }
      skip_space();
      if (is_label_char(peek())) {
        throw UnsupportedFeature("newick: internal vertex label at offset " + std::to_string(pos_));
      }
      reject_branch_length();
      return RootedTree(std::move(kids));
    }
    std::string label;
    while (is_label_char(peek())) label.push_back(text_[pos_++]);
    skip_space();
    reject_branch_length();
    if (peek() == '\'' || peek() == '"') fail("a label of [A-Za-z0-9_.-] characters");
    if (label.empty()) {
      const char c = peek();
      if (c != ',' && c != ')' && c != ';') fail("a label, '(', ',' or ')'");
      return RootedTree::leaf();
    }
    return RootedTree::leaf(std::move(label));
  }

  void reject_branch_length() {
    if (peek() == ':') throw UnsupportedFeature("newick: branch length at offset " + std::to_string(pos_));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c, const char* what) {
    if (peek() != c) fail(what);
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw NewickSyntaxError(pos_, "expected " + expected + ", found " + found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write(const RootedTree& t, std::string& out) {
  if (t.is_leaf()) {
    if (t.label()) out += *t.label();
    return;
  }
  out.push_back('(');
  for (std::size_t i = 0; i < t.outdegree(); ++i) {
    if (i) out.push_back(',');
    write(t.children()[i], out);
  }
  out.push_back(')');
}

// Returns the code of `t` and appends its canonical Newick form.
CanonicalCode write_canonical(const RootedTree& t, std::string& out) {
  if (t.is_leaf()) return single_vertex_code();
  std::vector<std::pair<CanonicalCode, std::string>> kids;
  for (const auto& c : t.children()) {
    std::string text;
    CanonicalCode code = write_canonical(c, text);
    kids.emplace_back(std::move(code), std::move(text));
  }
  std::sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) { return a.first.code < b.first.code; });
  std::vector<const CanonicalCode*> codes;
  out.push_back('(');
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) out.push_back(',');
    out += kids[i].second;
    codes.push_back(&kids[i].first);
  }
  out.push_back(')');
  return join_codes(codes);
}

}  // namespace

RootedTree parse_newick(std::string_view text) { return Parser(text).parse(); }

std::string to_newick(const RootedTree& t, bool canonical) {
  std::string out;
  if (canonical) {
    write_canonical(t, out);
  } else {
    write(t, out);
  }
  out.push_back(';');
  return out;
}

}  // namespace leafsub
