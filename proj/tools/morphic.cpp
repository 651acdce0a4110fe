// morphic: command-line front end over the C API.
//
// Exit codes: 0 ok/verified, 1 violation or refutation, 2 usage/parse
// error, 3 resource budget exceeded.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morphic/morphic.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int exit_code(morphic_status s) {
  switch (s) {
    case MORPHIC_OK: return kExitOk;
    case MORPHIC_REFUTED: return kExitRefuted;
    case MORPHIC_ERR_RESOURCE: return kExitResource;
    default: return kExitUsage;
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Owning wrapper for strings handed out by the library.
struct CString {
  char* p = nullptr;
  ~CString() { morphic_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct MorphismHandle {
  morphic_morphism* p = nullptr;
  ~MorphismHandle() { morphic_morphism_free(p); }
};

struct ConstraintsHandle {
  morphic_constraints* p = nullptr;
  ~ConstraintsHandle() { morphic_constraints_free(p); }
};

struct Budgets {
  std::uint64_t nodes = 0;
  double seconds = 0;
  unsigned workers = 0;
  bool progress = false;
};

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long x = std::strtoull(v, &end, 10);
  if (*end || x == 0) throw UsageError(std::string(name) + " must be a positive integer");
  return x;
}

void report_progress(std::uint64_t nodes, std::size_t depth, void*) {
  std::cerr << "progress: " << nodes << " nodes, depth " << depth << std::endl;
}

morphic_search_options search_options(const Budgets& b) {
  morphic_search_options o;
  morphic_search_options_init(&o);
  o.node_budget = b.nodes ? b.nodes : env_u64("MORPHIC_NODE_BUDGET", o.node_budget);
  o.time_limit_seconds = b.seconds;
  if (o.time_limit_seconds == 0) o.time_limit_seconds = static_cast<double>(env_u64("MORPHIC_TIME_LIMIT", 0));
  o.workers = b.workers ? b.workers : static_cast<unsigned>(env_u64("MORPHIC_WORKERS", 1));
  if (b.progress) o.progress = report_progress;
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Word from --input FILE or --stdin, whitespace removed.
std::string read_word(const std::string& path, bool use_stdin) {
  if (path.empty() == !use_stdin) throw UsageError("give exactly one of --input FILE or --stdin");
  std::string raw = use_stdin ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_file(path);
  std::string out;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int fail(morphic_status s) {
  std::cerr << "morphic: " << morphic_status_name(s) << ": " << morphic_last_error() << '\n';
  return exit_code(s);
}

void load_constraints(const std::string& path, ConstraintsHandle& c) {
  morphic_status s = morphic_constraints_load(path.c_str(), &c.p);
  if (s != MORPHIC_OK) throw s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morphic words, repetitions, pattern avoidance and characterization checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", morphic_version());

  std::string output;
  Budgets budgets;
  app.add_option("-o,--output", output, "Write results to this file instead of stdout");

  auto add_budget_flags = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", budgets.nodes, "Node budget (default: MORPHIC_NODE_BUDGET or 2^32)");
    sub->add_option("--time-limit", budgets.seconds, "Wall-clock limit in seconds (default: MORPHIC_TIME_LIMIT)");
    sub->add_option("--workers", budgets.workers, "Worker threads (default: MORPHIC_WORKERS or 1)");
    sub->add_flag("--progress", budgets.progress, "Report progress on stderr");
  };

  std::string input;
  bool use_stdin = false;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "File holding the word (whitespace ignored)");
    sub->add_flag("--stdin", use_stdin, "Read the word from standard input");
  };

  // generate
  std::string morphism, outer;
  std::size_t length = 0;
  auto* generate = app.add_subcommand("generate", "Print a prefix of a fixed point or its image");
  generate->add_option("--morphism", morphism, "Prolongable morphism (slash format or catalog name)")->required();
  generate->add_option("--outer", outer, "Morphism applied to the fixed point");
  generate->add_option("--length", length, "Prefix length")->required();

  auto* squares = app.add_subcommand("squares", "List distinct squares");
  add_input(squares);
  auto* overlaps = app.add_subcommand("overlaps", "List distinct minimal overlaps");
  add_input(overlaps);
  auto* exponent = app.add_subcommand("exponent", "Largest repetition exponent with a witness");
  add_input(exponent);

  std::string formula;
  std::size_t cap = 0;
  std::uint64_t steps = 0;
  auto* match = app.add_subcommand("match", "List distinct occurrences of a formula");
  match->add_option("--formula", formula, "Formula such as AABB or AA.ABAB.BB")->required();
  add_input(match);
  match->add_option("--cap", cap, "Longest variable image (default: word length)");
  match->add_option("--budget-steps", steps, "Backtracking step budget");

  std::string constraints;
  auto* check = app.add_subcommand("check", "Check a word against a constraint file");
  check->add_option("--constraints", constraints, "Constraint file")->required();
  add_input(check);

  std::size_t budget_length = 0;
  bool descending = false;
  auto* search = app.add_subcommand("search", "Search for a longest good word");
  search->add_option("--constraints", constraints, "Constraint file")->required();
  search->add_option("--budget-length", budget_length, "Stop once a good word of this length is found")->required();
  search->add_flag("--descending", descending, "Try letters in decreasing order");
  add_budget_flags(search);

  std::size_t horizon = 0;
  bool horizon_set = false;
  std::string witness_file;
  auto* extendable = app.add_subcommand("extendable", "Two-sided extendable words S^L");
  extendable->add_option("--constraints", constraints, "Constraint file")->required();
  extendable->add_option("--length", length, "L")->required();
  extendable->add_option("--horizon", horizon, "Extension length on each side (default: L)")
      ->each([&](const std::string&) { horizon_set = true; });
  extendable->add_option("--witnesses", witness_file, "Also write one witness per word to this file");
  add_budget_flags(extendable);

  std::size_t n_max = 0;
  auto* counts = app.add_subcommand("counts", "Number of good words by length");
  counts->add_option("--constraints", constraints, "Constraint file")->required();
  counts->add_option("--max", n_max, "Largest length")->required();
  add_budget_flags(counts);

  std::string manifest, dir;
  std::size_t check_length = 0, prefix = 0;
  bool extended = false;
  auto add_scale = [&](CLI::App* sub) {
    sub->add_option("--length", check_length, "Override the check length L");
    sub->add_option("--horizon", horizon, "Override the horizon");
    sub->add_option("--prefix", prefix, "Override the target prefix length");
    sub->add_flag("--extended", extended, "Also run checks marked extended");
    add_budget_flags(sub);
  };
  auto* verify = app.add_subcommand("verify", "Run one theorem manifest");
  verify->add_option("--manifest", manifest, "Manifest file")->required();
  add_scale(verify);
  auto* verify_all = app.add_subcommand("verify-all", "Run every manifest in a directory");
  verify_all->add_option("--dir", dir, "Manifest directory")->required();
  add_scale(verify_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Output out_file(output);
    std::ostream& out = out_file.stream();

    if (*generate) {
      MorphismHandle inner, outer_m;
      if (morphic_status s = morphic_morphism_parse(morphism.c_str(), &inner.p)) return fail(s);
      if (!outer.empty())
        if (morphic_status s = morphic_morphism_parse(outer.c_str(), &outer_m.p)) return fail(s);
      CString w;
      if (morphic_status s = morphic_generate(inner.p, outer_m.p, length, &w.p)) return fail(s);
      out << w.str() << '\n';
      return kExitOk;
    }

    if (*squares || *overlaps) {
      std::string w = read_word(input, use_stdin);
      CString text;
      morphic_status s = *squares ? morphic_squares(w.c_str(), &text.p) : morphic_overlaps(w.c_str(), &text.p);
      if (s) return fail(s);
      out << text.str();
      return kExitOk;
    }

    if (*exponent) {
      std::string w = read_word(input, use_stdin);
      morphic_exponent e;
      if (morphic_status s = morphic_max_exponent(w.c_str(), &e)) return fail(s);
      out << "exponent " << e.num << '/' << e.den << '\n'
          << "witness " << w.substr(e.start, e.length) << " start " << e.start << " period " << e.period << '\n';
      return kExitOk;
    }

    if (*match) {
      std::string w = read_word(input, use_stdin);
      CString text;
      std::size_t found = 0;
      morphic_status s = morphic_match(w.c_str(), formula.c_str(), cap ? cap : std::max<std::size_t>(w.size(), 1),
                                       steps, &text.p, &found);
      out << text.str();
      if (s) return fail(s);
      return kExitOk;
    }

    if (*check) {
      ConstraintsHandle c;
      load_constraints(constraints, c);
      std::string w = read_word(input, use_stdin);
      CString violation;
      morphic_status s = morphic_check(c.p, w.c_str(), &violation.p);
      if (s == MORPHIC_OK) {
        out << "ok\n";
        return kExitOk;
      }
      if (s == MORPHIC_REFUTED) {
        out << "violation: " << violation.str() << '\n';
        return kExitRefuted;
      }
      return fail(s);
    }

    if (*search) {
      ConstraintsHandle c;
      load_constraints(constraints, c);
      morphic_search_options o = search_options(budgets);
      o.descending_letters = descending;
      morphic_search_result r{};
      morphic_status s = morphic_search(c.p, budget_length, &o, &r);
      if (s == MORPHIC_OK || s == MORPHIC_ERR_RESOURCE) {
        out << (s != MORPHIC_OK      ? "budget-exceeded"
                : r.exhausted ? "exhausted"
                              : "reached-budget")
            << '\n'
            << "max_length " << r.max_length << '\n'
            << "witness " << (r.witness ? r.witness : "") << '\n'
            << "tree_nodes " << r.tree_nodes << '\n';
      }
      morphic_search_result_clear(&r);
      if (s) return fail(s);
      return kExitOk;
    }

    if (*extendable) {
      ConstraintsHandle c;
      load_constraints(constraints, c);
      morphic_search_options o = search_options(budgets);
      CString words, witnesses;
      std::uint64_t nodes = 0;
      morphic_status s = morphic_extendable(c.p, length, horizon_set ? horizon : length, &o, &words.p,
                                            witness_file.empty() ? nullptr : &witnesses.p, &nodes);
      if (s) return fail(s);
      out << words.str();
      if (!witness_file.empty()) {
        std::ofstream wf(witness_file);
        if (!wf) throw UsageError("cannot write " + witness_file);
        wf << witnesses.str();
      }
      if (budgets.progress) std::cerr << "search nodes: " << nodes << '\n';
      return kExitOk;
    }

    if (*counts) {
      ConstraintsHandle c;
      load_constraints(constraints, c);
      morphic_search_options o = search_options(budgets);
      if (n_max == 0) throw UsageError("--max must be positive");
      std::vector<std::uint64_t> table(n_max);
      if (morphic_status s = morphic_counts(c.p, n_max, &o, table.data())) return fail(s);
      for (std::size_t n = 1; n <= n_max; ++n) out << n << '\t' << table[n - 1] << '\n';
      return kExitOk;
    }

    if (*verify || *verify_all) {
      morphic_verify_options o;
      morphic_verify_options_init(&o);
      o.check_length = check_length;
      o.horizon = horizon;
      o.prefix = prefix;
      o.extended = extended;
      o.search = search_options(budgets);
      CString report;
      morphic_status s;
      if (*verify) {
        morphic_manifest* m = nullptr;
        if ((s = morphic_manifest_load(manifest.c_str(), &m))) return fail(s);
        s = morphic_verify(m, &o, &report.p);
        morphic_manifest_free(m);
      } else {
        std::size_t failures = 0;
        s = morphic_verify_dir(dir.c_str(), &o, &report.p, &failures);
      }
      out << report.str();
      if (s != MORPHIC_OK && s != MORPHIC_REFUTED) return fail(s);
      return exit_code(s);
    }
  } catch (const UsageError& e) {
    std::cerr << "morphic: " << e.what() << '\n';
    return kExitUsage;
  } catch (morphic_status s) {
    return fail(s);
  }
  return kExitUsage;
}
