#include "leafsub/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "leafsub/enumeration.hpp"
#include "leafsub/errors.hpp"

namespace leafsub {

namespace {

struct Part {
  std::size_t size;
  std::size_t index;
};

// Nondecreasing (size, index) sequences with the given leaf total.
void compose(const std::vector<TreeCorpus>& smaller, std::size_t remaining, std::size_t min_size,
             std::size_t min_index, std::vector<Part>& chosen, std::set<CanonicalCode>& seen, TreeCorpus& out) {
  if (remaining == 0) {
    if (chosen.size() < 2) return;
    std::vector<const CanonicalCode*> codes;
    std::vector<RootedTree> kids;
    for (const auto& p : chosen) {
      codes.push_back(&smaller[p.size - 1].codes[p.index]);
      kids.push_back(smaller[p.size - 1].trees[p.index]);
    }
    CanonicalCode code = join_codes(codes);
    if (seen.insert(code).second) out.trees.emplace_back(std::move(kids));
    return;
  }
  for (std::size_t s = min_size; s <= remaining && s < out.n; ++s) {
    const auto& corpus = smaller[s - 1];
    for (std::size_t i = (s == min_size ? min_index : 0); i < corpus.trees.size(); ++i) {
      chosen.push_back({s, i});
      compose(smaller, remaining - s, s, i, chosen, seen, out);
      chosen.pop_back();
    }
  }
}

TreeCorpus next_corpus(const std::vector<TreeCorpus>& smaller, std::size_t n) {
  TreeCorpus out;
  out.n = n;
  if (n == 1) {
    out.trees.emplace_back();
    out.codes.push_back(single_vertex_code());
    return out;
  }
  std::set<CanonicalCode> seen;
  std::vector<Part> chosen;
  compose(smaller, n, 1, 0, chosen, seen, out);
  // Order trees by code.
  std::vector<std::pair<CanonicalCode, RootedTree>> tagged;
  for (auto& t : out.trees) {
    CanonicalCode c = canonical_code(t);
    tagged.emplace_back(std::move(c), std::move(t));
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.trees.clear();
  for (auto& [c, t] : tagged) {
    out.codes.push_back(std::move(c));
    out.trees.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<TreeCorpus> generate_corpora(std::size_t n_max, std::size_t cap) {
  if (n_max < 1) throw InvalidArgument("generate_topological: n must be at least 1");
  if (n_max > cap) {
    throw ResourceLimit("generate_topological: n = " + std::to_string(n_max) + " exceeds the cap of " +
                        std::to_string(cap));
  }
  std::vector<TreeCorpus> all;
  for (std::size_t n = 1; n <= n_max; ++n) all.push_back(next_corpus(all, n));
  return all;
}

TreeCorpus generate_topological(std::size_t n, std::size_t cap) {
  return std::move(generate_corpora(n, cap).back());
}

Theorem1Report verify_theorem1(std::size_t n, std::size_t cap, unsigned threads) {
  const TreeCorpus corpus = generate_topological(n, cap);
  Theorem1Report rep;
  rep.n = n;
  rep.corpus_size = corpus.trees.size();
  rep.in_scope = n >= 5;

  std::vector<BigCount> counts(corpus.trees.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      counts[i] = static_cast<unsigned long>(induced_set(corpus.trees[i]).size());
    }
  };
  const unsigned workers = std::max(1u, threads);
  if (workers == 1) {
    work(0, counts.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (counts.size() + workers - 1) / workers;
    for (std::size_t lo = 0; lo < counts.size(); lo += chunk) {
      pool.emplace_back(work, lo, std::min(counts.size(), lo + chunk));
    }
    for (auto& th : pool) th.join();
  }

  rep.minimum = *std::min_element(counts.begin(), counts.end());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    ++rep.histogram[counts[i]];
    if (counts[i] == rep.minimum) rep.minimizers.push_back(corpus.codes[i]);
  }

  rep.minimum_ok = rep.minimum == static_cast<unsigned long>(n);
  if (!rep.minimum_ok) {
    rep.failures.push_back("minimum N is " + rep.minimum.get_str() + ", expected " + std::to_string(n));
  }
  std::set<CanonicalCode> expected{canonical_code(star(n)), canonical_code(binary_caterpillar(n))};
  std::set<CanonicalCode> got(rep.minimizers.begin(), rep.minimizers.end());
  rep.minimizers_ok = got == expected;
  if (!rep.minimizers_ok) {
    for (const auto& c : got) {
      if (!expected.count(c)) rep.failures.push_back("unexpected minimizer " + c.code);
    }
    for (const auto& c : expected) {
      if (!got.count(c)) rep.failures.push_back("missing minimizer " + c.code);
    }
  }
  return rep;
}

namespace {

std::size_t max_outdegree(const RootedTree& t) {
  std::size_t m = t.outdegree();
  for (const auto& c : t.children()) m = std::max(m, max_outdegree(c));
  return m;
}

}  // namespace

CaseWitnesses case_witnesses(const RootedTree& t) {
  if (!is_topological(t)) throw PreconditionViolation("case_witnesses: tree is not topological");
  const std::size_t n = leaf_count(t);
  if (n < 5) throw PreconditionViolation("case_witnesses: tree has fewer than five leaves");
  const CanonicalCode code = canonical_code(t);
  if (code == canonical_code(star(n))) throw PreconditionViolation("case_witnesses: tree is a star");
  if (code == canonical_code(binary_caterpillar(n))) {
    throw PreconditionViolation("case_witnesses: tree is a binary caterpillar");
  }

  CaseWitnesses w;
  if (max_outdegree(t) >= 3) {
    w.proof_case = 1;
    w.first = canonical_code(star(3));
    w.second = canonical_code(binary_caterpillar(3));
  } else {
    w.proof_case = 2;
    w.first = canonical_code(complete_dary(2, 2));
    w.second = canonical_code(binary_caterpillar(4));
  }
  const InducedSet classes = induced_set(t);
  for (const auto* c : {&w.first, &w.second}) {
    if (!classes.contains(*c)) {
      throw VerificationFailure("case " + std::to_string(w.proof_case) + " witness " + c->code +
                                " is not induced by " + code.code);
    }
  }
  return w;
}

}  // namespace leafsub
