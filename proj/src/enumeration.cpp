#include "leafsub/enumeration.hpp"

#include <map>
#include <memory>
#include <set>

#include "leafsub/errors.hpp"
#include "leafsub/induction.hpp"

namespace leafsub {

namespace {

using ClassSet = std::set<CanonicalCode>;
using Multiset = std::vector<const CanonicalCode*>;

struct Visit {
  CanonicalCode code;
  std::shared_ptr<const ClassSet> classes;
};

// Every multiset of size 0..max_size drawn from `pool`, as nondecreasing index runs.
void multisets(const std::vector<const CanonicalCode*>& pool, std::size_t max_size, std::size_t start,
               Multiset& current, std::vector<Multiset>& out) {
  out.push_back(current);
  if (current.size() == max_size) return;
  for (std::size_t i = start; i < pool.size(); ++i) {
    current.push_back(pool[i]);
    multisets(pool, max_size, i, current, out);
    current.pop_back();
  }
}

// binom(s + m, m) without overflow; saturates at `limit`.
std::size_t multiset_option_count(std::size_t s, std::size_t m, std::size_t limit) {
  long double r = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    r = r * static_cast<long double>(s + i) / static_cast<long double>(i);
    if (r > static_cast<long double>(limit)) return limit + 1;
  }
  return static_cast<std::size_t>(r + 0.5L);
}

class Enumerator {
 public:
  explicit Enumerator(const EnumerationOptions& options) : options_(options) {
    auto leaf = std::make_shared<ClassSet>();
    leaf->insert(single_vertex_code());
    leaf_set_ = std::move(leaf);
  }

  Visit visit(const RootedTree& t) {
    if (t.is_leaf()) return {single_vertex_code(), leaf_set_};
    if (t.outdegree() == 1) throw InvalidArgument("induced_set: host tree has a vertex of outdegree 1");

    std::vector<Visit> kids;
    kids.reserve(t.outdegree());
    for (const auto& c : t.children()) kids.push_back(visit(c));
    std::vector<const CanonicalCode*> kid_codes;
    for (const auto& k : kids) kid_codes.push_back(&k.code);
    CanonicalCode code = join_codes(kid_codes);

    if (options_.memoize) {
      if (auto it = memo_.find(code.code); it != memo_.end()) return {std::move(code), it->second};
    }

    // Isomorphic children form one group; a group of multiplicity m over
    // class set S contributes any multiset of at most m classes from S.
    std::map<std::string, std::pair<std::size_t, const ClassSet*>> groups;
    for (const auto& k : kids) {
      auto& g = groups[k.code.code];
      ++g.first;
      g.second = k.classes.get();
    }

    auto out = std::make_shared<ClassSet>();
    out->insert(single_vertex_code());
    for (const auto& [key, group] : groups) {
      charge(group.second->size());
      out->insert(group.second->begin(), group.second->end());
    }

    std::size_t joins = 1;
    const std::size_t remaining = options_.code_budget - produced_;
    for (const auto& [key, group] : groups) {
      joins *= multiset_option_count(group.second->size(), group.first, remaining);
      if (joins > remaining) {
        throw ResourceLimit("induced_set: more than " + std::to_string(options_.code_budget) +
                            " candidate codes (code budget)");
      }
    }

    std::vector<std::vector<Multiset>> options;
    options.reserve(groups.size());
    for (const auto& [key, group] : groups) {
      std::vector<const CanonicalCode*> pool;
      pool.reserve(group.second->size());
      for (const auto& c : *group.second) pool.push_back(&c);
      std::vector<Multiset> choices;
      Multiset current;
      multisets(pool, group.first, 0, current, choices);
      options.push_back(std::move(choices));
    }

    // Odometer over one choice per group.
    std::vector<std::size_t> pick(options.size(), 0);
    Multiset branches;
    while (true) {
      branches.clear();
      for (std::size_t g = 0; g < options.size(); ++g) {
        const auto& m = options[g][pick[g]];
        branches.insert(branches.end(), m.begin(), m.end());
      }
      if (branches.size() >= 2) {
        charge(1);
        out->insert(join_codes(branches));
      }
      std::size_t g = 0;
      while (g < pick.size() && ++pick[g] == options[g].size()) pick[g++] = 0;
      if (g == pick.size()) break;
    }

    std::shared_ptr<const ClassSet> result = std::move(out);
    if (options_.memoize) memo_.emplace(code.code, result);
    return {std::move(code), std::move(result)};
  }

 private:
  void charge(std::size_t n) {
    produced_ += n;
    if (produced_ > options_.code_budget) {
      throw ResourceLimit("induced_set: more than " + std::to_string(options_.code_budget) +
                          " candidate codes (code budget)");
    }
  }

  EnumerationOptions options_;
  std::shared_ptr<const ClassSet> leaf_set_;
  std::map<std::string, std::shared_ptr<const ClassSet>> memo_;
  std::size_t produced_ = 0;
};

}  // namespace

InducedSet induced_set(const RootedTree& t, const EnumerationOptions& options) {
  Enumerator e(options);
  Visit v = e.visit(t);
  InducedSet out;
  out.codes = *v.classes;
  out.host_code = std::move(v.code);
  return out;
}

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::automatic: return "auto";
    case CountMethod::enumerate: return "enumerate";
    case CountMethod::brute_force: return "brute";
    case CountMethod::formula: return "formula";
  }
  return "?";
}

CountMethod parse_count_method(const std::string& s) {
  if (s == "auto") return CountMethod::automatic;
  if (s == "enumerate") return CountMethod::enumerate;
  if (s == "brute") return CountMethod::brute_force;
  if (s == "formula") return CountMethod::formula;
  throw InvalidArgument("unknown count method '" + s + "'");
}

CountReport count_report(const RootedTree& t, const CountOptions& options) {
  if (!is_topological(t)) throw InvalidArgument("count: host tree has a vertex of outdegree 1");
  CountReport report;
  report.family = recognize_family(t);

  auto enumerate = [&] {
    return BigCount(static_cast<unsigned long>(induced_set(t, options.enumeration).size()));
  };

  switch (options.method) {
    case CountMethod::enumerate:
      report.runs.push_back({CountMethod::enumerate, enumerate()});
      break;
    case CountMethod::brute_force: {
      BruteForceOptions bf{options.brute_force_cap, options.threads};
      report.runs.push_back(
          {CountMethod::brute_force, BigCount(static_cast<unsigned long>(brute_force_set(t, bf).size()))});
      break;
    }
    case CountMethod::formula:
      if (!report.family) throw InvalidArgument("count: tree is not a recognized family member");
      report.runs.push_back({CountMethod::formula, family_count(*report.family)});
      break;
    case CountMethod::automatic:
      if (report.family) {
        BigCount f = family_count(*report.family);
        const bool small = f <= 100000;
        report.runs.push_back({CountMethod::formula, std::move(f)});
        if (small) {
          try {
            report.runs.push_back({CountMethod::enumerate, enumerate()});
          } catch (const ResourceLimit&) {
          }
        }
      } else {
        report.runs.push_back({CountMethod::enumerate, enumerate()});
      }
      break;
  }
  report.value = report.runs.front().value;
  for (const auto& r : report.runs) report.agree = report.agree && r.value == report.value;
  return report;
}

}  // namespace leafsub
