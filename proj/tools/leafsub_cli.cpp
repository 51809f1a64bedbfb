// leafsub: count, enumerate and study leaf-induced subtrees from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "leafsub/asymptotics.hpp"
#include "leafsub/enumeration.hpp"
#include "leafsub/errors.hpp"
#include "leafsub/extremal.hpp"
#include "leafsub/induction.hpp"
#include "leafsub/newick.hpp"
#include "report.hpp"

namespace leafsub::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RootedTree load_newick(const std::string& path) { return parse_newick(read_file(path)); }

std::string str(const BigCount& v) { return v.get_str(); }

// ---------------------------------------------------------------- count

struct CountArgs {
  std::string newick;
  std::string family;
  std::optional<long> d, n, h;
  std::string method = "auto";
};

FamilyMatch family_from_args(const CountArgs& a) {
  auto need = [&](const std::optional<long>& v, const char* flag) {
    if (!v) throw UsageError("--family " + a.family + " needs " + flag);
    return *v;
  };
  FamilyMatch m{};
  if (a.family == "star") {
    m = {Family::star, 0, need(a.n, "--n"), 1};
  } else if (a.family == "bincat") {
    m = {Family::binary_caterpillar, 2, need(a.n, "--n"), 0};
    m.h = m.n - 1;
  } else if (a.family == "cat") {
    m = {Family::dary_caterpillar, need(a.d, "--d"), need(a.n, "--n"), 0};
    if (m.d == 2) m.family = Family::binary_caterpillar;
    if (m.d > 1) m.h = (m.n - 1) / (m.d - 1);
  } else if (a.family == "complete") {
    m = {Family::complete_dary, need(a.d, "--d"), 0, need(a.h, "--h")};
  } else {
    throw UsageError("unknown family '" + a.family + "' (star, bincat, cat, complete)");
  }
  return m;
}

RootedTree build_family(const FamilyMatch& m) {
  switch (m.family) {
    case Family::star: return star(static_cast<std::size_t>(std::max(0L, m.n)));
    case Family::binary_caterpillar: return binary_caterpillar(static_cast<std::size_t>(std::max(0L, m.n)));
    case Family::dary_caterpillar: return dary_caterpillar(m.d, m.n);
    case Family::complete_dary: return complete_dary(m.d, m.h);
  }
  throw UsageError("unknown family");
}

Report run_count(const CountArgs& a, unsigned threads) {
  Report r;
  r.command = "count";
  if (a.newick.empty() == a.family.empty()) throw UsageError("count needs exactly one of --newick or --family");
  CountOptions opts;
  opts.method = parse_count_method(a.method);
  opts.threads = threads;
  r.inputs["method"] = a.method;

  std::optional<RootedTree> tree;
  std::optional<FamilyMatch> fam;
  if (!a.newick.empty()) {
    r.inputs["newick"] = a.newick;
    tree = load_newick(a.newick);
  } else {
    fam = family_from_args(a);
    r.inputs["family"] = a.family;
    if (a.d) r.inputs["d"] = *a.d;
    if (a.n) r.inputs["n"] = *a.n;
    if (a.h) r.inputs["h"] = *a.h;
    try {
      tree = build_family(*fam);
    } catch (const ResourceLimit&) {
      // Too large to materialize; only the formula can answer.
      if (opts.method != CountMethod::automatic && opts.method != CountMethod::formula) throw;
    }
  }

  CountReport rep;
  if (tree) {
    rep = count_report(*tree, opts);
  } else {
    rep.value = family_count(*fam);
    rep.runs.push_back({CountMethod::formula, rep.value});
    rep.family = fam;
  }

  r.results["value"] = str(rep.value);
  if (tree) r.results["leaf_count"] = leaf_count(*tree);
  r.results["family"] = rep.family ? json(to_string(rep.family->family)) : json(nullptr);
  json runs = json::array();
  std::string summary;
  for (const auto& run : rep.runs) {
    runs.push_back({{"method", to_string(run.method)}, {"value", str(run.value)}});
    summary += (summary.empty() ? "" : " ") + to_string(run.method) + "=" + str(run.value);
  }
  r.results["runs"] = runs;
  r.lines.push_back(str(rep.value));
  if (rep.runs.size() >= 2) {
    r.results["agree"] = rep.agree;
    r.lines.push_back(summary + (rep.agree ? " (agree)" : " (DISAGREE)"));
    r.check("methods_agree", rep.agree, str(rep.runs.front().value), str(rep.runs.back().value));
  }
  return r;
}

// ---------------------------------------------------------------- enumerate

Report run_enumerate(const std::string& path, bool emit_newick) {
  Report r;
  r.command = "enumerate";
  r.inputs["newick"] = path;
  r.inputs["emit_newick"] = emit_newick;
  const RootedTree t = load_newick(path);
  const InducedSet s = induced_set(t);
  json classes = json::array();
  for (const auto& c : s.codes) {
    const std::string nw = to_newick(tree_from_code(c.code), true);
    classes.push_back({{"leaf_count", c.leaf_count}, {"newick", nw}});
    r.lines.push_back(emit_newick ? nw : std::to_string(c.leaf_count) + "\t" + nw);
  }
  r.results["count"] = s.size();
  r.results["classes"] = classes;
  return r;
}

// ---------------------------------------------------------------- kappa, table, floor

Report run_kappa(long d, long digits) {
  if (digits < 1) throw UsageError("--digits must be positive");
  Report r;
  r.command = "kappa";
  r.inputs = {{"d", d}, {"digits", digits}};
  const KappaResult k = kappa(d, Precision::from_digits(digits + 5));
  r.results = {{"kappa", k.kappa.to_string(digits)},
               {"K", k.K.to_string(digits)},
               {"terms_used", k.terms_used},
               {"tail_bound", k.tail_bound.to_scientific(3)},
               {"error_bound", k.kappa_error.to_scientific(3)}};
  r.lines = {k.kappa.to_string(digits), "K = " + k.K.to_string(digits), "terms = " + std::to_string(k.terms_used),
             "tail bound = " + k.tail_bound.to_scientific(3)};
  return r;
}

Report run_table_kappa(long d_max, long digits) {
  if (d_max < 2) throw UsageError("--d-max must be at least 2");
  Report r;
  r.command = "table";
  r.inputs = {{"table", "kappa"}, {"d_max", d_max}, {"digits", digits}};
  json rows = json::array();
  r.lines.push_back("d\tkappa(d)");
  for (long d = 2; d <= d_max; ++d) {
    const std::string v = kappa(d, Precision::from_digits(digits + 5)).kappa.to_string(digits);
    rows.push_back({{"d", d}, {"kappa", v}});
    r.lines.push_back(std::to_string(d) + "\t" + v);
  }
  r.results["rows"] = rows;
  return r;
}

Report run_table_complete(long d, long h_max) {
  Report r;
  r.command = "table";
  r.inputs = {{"table", "complete"}, {"d", d}, {"h_max", h_max}};
  const auto seq = complete_dary_counts(d, h_max);
  json rows = json::array();
  r.lines.push_back("h\tN");
  for (std::size_t h = 0; h < seq.size(); ++h) {
    rows.push_back({{"h", h}, {"count", str(seq[h])}});
    r.lines.push_back(std::to_string(h) + "\t" + str(seq[h]));
  }
  r.results["rows"] = rows;
  return r;
}

Report run_floor(long d, long h) {
  Report r;
  r.command = "floor";
  r.inputs = {{"d", d}, {"h", h}};
  const FloorEvaluation ev = evaluate_floor_formula(d, h);
  const BigCount exact = complete_dary_count(d, h);
  const bool match = ev.value == exact;
  const long int_digits = static_cast<long>(mpz_sizeinbase(ev.value.get_mpz_t(), 10));
  r.results = {{"floor", str(ev.value)},
               {"exact", str(exact)},
               {"match", match},
               {"x", ev.x.to_string(int_digits + 6)},
               {"bits_used", ev.bits_used}};
  r.lines = {"floor = " + str(ev.value), "exact = " + str(exact), std::string("match = ") + (match ? "yes" : "no")};
  r.check("floor_equals_recursion", match, str(exact), str(ev.value));
  return r;
}

// ---------------------------------------------------------------- verify

Report verify_theorem1_range(long n_max, unsigned threads) {
  Report r;
  r.command = "verify";
  r.inputs = {{"suite", "theorem1"}, {"n_max", n_max}};
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  json rows = json::array();
  for (long n = 1; n <= n_max; ++n) {
    const Theorem1Report rep = verify_theorem1(static_cast<std::size_t>(n), kDefaultCorpusCap, threads);
    json minimizers = json::array();
    for (const auto& c : rep.minimizers) minimizers.push_back(to_newick(tree_from_code(c.code), true));
    json histogram = json::object();
    for (const auto& [value, k] : rep.histogram) histogram[str(value)] = k;
    rows.push_back({{"n", n},
                    {"corpus_size", rep.corpus_size},
                    {"minimum", str(rep.minimum)},
                    {"minimizers", minimizers},
                    {"histogram", histogram},
                    {"in_scope", rep.in_scope}});
    std::string line = "n=" + std::to_string(n) + " classes=" + std::to_string(rep.corpus_size) +
                       " min=" + str(rep.minimum) + " minimizers=" + std::to_string(rep.minimizers.size());
    if (!rep.in_scope) line += " (below 5, not checked)";
    r.lines.push_back(line);
    if (!rep.in_scope) continue;
    const std::string tag = "theorem1.n=" + std::to_string(n);
    r.check(tag + ".minimum", rep.minimum_ok, std::to_string(n), str(rep.minimum));
    r.check(tag + ".minimizers", rep.minimizers_ok, 2, rep.minimizers.size());
  }
  r.results["rows"] = rows;
  return r;
}

Report verify_prop7(long d_max) {
  Report r;
  r.command = "verify";
  r.inputs = {{"suite", "prop7"}, {"d_max", d_max}};
  const Prop7Report rep = prop7_bound_check(d_max);
  json rows = json::array();
  for (const auto& row : rep.rows) {
    rows.push_back({{"d", row.d},
                    {"kappa", row.kappa.to_string(30)},
                    {"bound", row.bound.to_string(30)},
                    {"lower_margin", row.lower_margin.to_scientific(6)},
                    {"upper_margin", row.upper_margin.to_scientific(6)}});
    r.lines.push_back("d=" + std::to_string(row.d) + " 1 < " + row.kappa.to_string(20) +
                      " <= " + row.bound.to_string(20));
    r.check("prop7.d=" + std::to_string(row.d), row.pass, "1 < kappa <= d^(1/(d-1))", row.kappa.to_string(30));
  }
  r.results["rows"] = rows;
  r.results["decreasing_from_3"] = rep.decreasing_from_3;
  return r;
}

Report verify_prop8(long d, long h_max) {
  Report r;
  r.command = "verify";
  r.inputs = {{"suite", "prop8"}, {"d", d}, {"h_max", h_max}};
  const FindHReport rep = find_H(d, h_max);
  json rows = json::array();
  for (const auto& row : rep.rows) {
    rows.push_back({{"h", row.h},
                    {"floor", row.floor ? json(str(*row.floor)) : json(nullptr)},
                    {"exact", str(row.exact)},
                    {"match", row.match}});
    r.lines.push_back("h=" + std::to_string(row.h) + " floor=" + (row.floor ? str(*row.floor) : "?") +
                      " exact=" + str(row.exact) + (row.match ? "" : " mismatch"));
  }
  r.results["rows"] = rows;
  r.results["H"] = rep.H ? json(*rep.H) : json(nullptr);
  r.results["mismatches"] = rep.mismatches;
  r.lines.push_back("H = " + (rep.H ? std::to_string(*rep.H) : std::string("none")));
  r.check("prop8.H_found", rep.H.has_value(), "H <= " + std::to_string(h_max),
          rep.H ? json(*rep.H) : json(nullptr));
  return r;
}

Report verify_lemma1(long d, long n_max) {
  Report r;
  r.command = "verify";
  r.inputs = {{"suite", "lemma1"}, {"d", d}, {"n_max", n_max}};
  if (n_max < 1) throw UsageError("--n must be at least 1");
  const Precision p = Precision::from_digits(40);
  const BigReal tol = BigReal::parse("1e-20", p);
  const PolyRecurrence rec = cdh_recurrence(d);
  json rows = json::array();
  for (int n = 1; n <= n_max; ++n) {
    const BigReal lhs = lemma1_log_identity(rec, n, p);
    const BigReal rhs = log_iterated(rec, n, p);
    const BigReal diff = abs(lhs - rhs);
    rows.push_back({{"n", n}, {"identity", lhs.to_string(30)}, {"iterated", rhs.to_string(30)}});
    r.lines.push_back("n=" + std::to_string(n) + " log A_n = " + rhs.to_string(30));
    r.check("lemma1.n=" + std::to_string(n), diff < tol, "|difference| < 1e-20",
            diff.is_zero() ? std::string("0") : diff.to_scientific(3));
  }
  r.results["rows"] = rows;
  return r;
}

Report verify_oracle(long n_max, unsigned threads) {
  Report r;
  r.command = "verify";
  r.inputs = {{"suite", "oracle"}, {"n_max", n_max}};
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  const auto corpora = generate_corpora(static_cast<std::size_t>(n_max));
  json rows = json::array();
  for (const auto& corpus : corpora) {
    std::size_t agree = 0;
    for (const auto& t : corpus.trees) {
      if (induced_set(t) == brute_force_set(t, {20, threads})) ++agree;
    }
    rows.push_back({{"n", corpus.n}, {"classes", corpus.trees.size()}, {"agree", agree}});
    r.lines.push_back("n=" + std::to_string(corpus.n) + " " + std::to_string(agree) + "/" +
                      std::to_string(corpus.trees.size()) + " agree");
    r.check("oracle.n=" + std::to_string(corpus.n), agree == corpus.trees.size(), corpus.trees.size(), agree);
  }
  r.results["rows"] = rows;
  return r;
}

int run(int argc, char** argv) {
  CLI::App app{"Count and enumerate leaf-induced subtrees of rooted topological trees"};
  app.set_help_flag("--help", "Print this help message and exit");  // -h is taken by --h
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  unsigned threads = 1;
  app.add_flag("--json", as_json, "Emit a JSON report");
  app.add_option("--threads", threads, "Worker threads for the long verifications")->check(CLI::Range(1u, 256u));

  CountArgs ca;
  auto* count_cmd = app.add_subcommand("count", "N(T) for a tree file or a named family");
  count_cmd->add_option("--newick", ca.newick, "Newick file");
  count_cmd->add_option("--family", ca.family, "star | bincat | cat | complete");
  count_cmd->add_option("--d", ca.d, "Arity");
  count_cmd->add_option("--n", ca.n, "Leaf count");
  count_cmd->add_option("--h", ca.h, "Height");
  count_cmd->add_option("--method", ca.method, "auto | enumerate | brute | formula");

  std::string enum_file;
  bool emit_newick = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "List the induced classes of a tree");
  enum_cmd->add_option("--newick", enum_file, "Newick file")->required();
  enum_cmd->add_flag("--emit-newick", emit_newick, "Bare canonical Newick lines");

  long kd = 2, kdigits = 20;
  auto* kappa_cmd = app.add_subcommand("kappa", "Growth constant kappa(d)");
  kappa_cmd->add_option("--d", kd, "Arity")->required();
  kappa_cmd->add_option("--digits", kdigits, "Significant digits");

  bool tk = false, tc = false;
  long t_dmax = 10, t_d = 2, t_hmax = 6, t_digits = 16;
  auto* table_cmd = app.add_subcommand("table", "Tables of kappa(d) or N(C^d_h)");
  table_cmd->add_flag("--kappa", tk, "kappa(d) for d = 2..d-max");
  table_cmd->add_flag("--complete", tc, "N(C^d_h) for h = 0..h-max");
  table_cmd->add_option("--d-max", t_dmax);
  table_cmd->add_option("--d", t_d);
  table_cmd->add_option("--h-max", t_hmax);
  table_cmd->add_option("--digits", t_digits);

  long fd = 2, fh = 2;
  auto* floor_cmd = app.add_subcommand("floor", "Floor formula against the exact count");
  floor_cmd->add_option("--d", fd)->required();
  floor_cmd->add_option("--h", fh)->required();

  bool v_t1 = false, v_p7 = false, v_p8 = false, v_l1 = false, v_or = false;
  long v_nmax = 6, v_dmax = 10, v_d = 2, v_hmax = 8, v_n = 8;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_flag("--theorem1", v_t1, "Minimum N over the n-leaf corpus");
  verify_cmd->add_flag("--prop7", v_p7, "1 < kappa(d) <= d^(1/(d-1))");
  verify_cmd->add_flag("--prop8", v_p8, "Floor formula threshold H");
  verify_cmd->add_flag("--lemma1", v_l1, "Log identity against direct iteration");
  verify_cmd->add_flag("--oracle", v_or, "Enumeration against brute force");
  verify_cmd->add_option("--n-max", v_nmax);
  verify_cmd->add_option("--d-max", v_dmax);
  verify_cmd->add_option("--d", v_d);
  verify_cmd->add_option("--h-max", v_hmax);
  verify_cmd->add_option("--n", v_n);

  for (auto* sub : app.get_subcommands({})) sub->set_help_flag("--help", "Print this help message and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Report rep;
    if (*count_cmd) {
      rep = run_count(ca, threads);
    } else if (*enum_cmd) {
      rep = run_enumerate(enum_file, emit_newick);
    } else if (*kappa_cmd) {
      rep = run_kappa(kd, kdigits);
    } else if (*table_cmd) {
      if (tk == tc) throw UsageError("table needs exactly one of --kappa or --complete");
      rep = tk ? run_table_kappa(t_dmax, t_digits) : run_table_complete(t_d, t_hmax);
    } else if (*floor_cmd) {
      rep = run_floor(fd, fh);
    } else {
      if (int(v_t1) + int(v_p7) + int(v_p8) + int(v_l1) + int(v_or) != 1) {
        throw UsageError("verify needs exactly one of --theorem1, --prop7, --prop8, --lemma1, --oracle");
      }
      if (v_t1) rep = verify_theorem1_range(v_nmax, threads);
      if (v_p7) rep = verify_prop7(v_dmax);
      if (v_p8) rep = verify_prop8(v_d, v_hmax);
      if (v_l1) rep = verify_lemma1(v_d, v_n);
      if (v_or) rep = verify_oracle(v_nmax, threads);
    }
    rep.print(std::cout, as_json);
    return rep.passed() ? kExitOk : kExitFailed;
  } catch (const VerificationFailure& e) {
    std::cerr << "leafsub: " << e.what() << '\n';
    return kExitFailed;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "leafsub: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "leafsub: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace
}  // namespace leafsub::cli

int main(int argc, char** argv) { return leafsub::cli::run(argc, argv); }
