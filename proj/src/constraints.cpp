#include "morphic/constraints.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "matcher.hpp"
#include "morphic/error.hpp"
#include "morphic/repetition.hpp"
#include "runs.hpp"

namespace morphic {

namespace {

bool has_period(std::string_view s, std::size_t p) {
  for (std::size_t i = 0; i + p < s.size(); ++i)
    if (s[i] != s[i + p]) return false;
  return true;
}

std::size_t parse_count(const std::string& tok, int line) {
  std::size_t v = 0;
  std::size_t used = 0;
  try {
    v = std::stoull(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty() || tok[0] == '-')
    throw SyntaxError("constraints line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                      tok + "'");
  return v;
}

}  // namespace

void ConstraintSet::validate() const {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet)
    throw AlphabetError("constraints: alphabet size must be 1..10");
  auto check_letters = [&](const Word& w, std::string_view what) {
    if (w.max_letter() >= alphabet_size)
      throw DomainError("constraints: " + std::string(what) + " " + w.str() + " uses a letter outside the alphabet");
  };
  for (const Word& w : forbidden_factors) {
    if (w.empty()) throw DomainError("constraints: the empty word cannot be forbidden");
    check_letters(w, "forbidden factor");
  }
  if (allowed_squares) {
    for (const Word& w : *allowed_squares) {
      check_letters(w, "allowed square");
      std::string_view d = w.digits();
      if (d.empty() || d.size() % 2 || d.substr(0, d.size() / 2) != d.substr(d.size() / 2))
        throw DomainError("constraints: allowed square " + w.str() + " is not a square");
    }
  }
  if (allowed_overlaps) {
    for (const Word& w : *allowed_overlaps) {
      check_letters(w, "allowed overlap");
      if (w.size() < 3 || w.size() % 2 == 0 || !has_period(w.digits(), w.size() / 2))
        throw DomainError("constraints: allowed overlap " + w.str() + " is not a minimal overlap");
    }
  }
  if (sq_min_period && *sq_min_period == 0) throw DomainError("constraints: square period bound must be positive");
  if (exponent_cap && exponent_cap->exponent <= Rational(1, 1))
    throw DomainError("constraints: exponent cap must exceed 1");
  if (graph && graph->vertex_count() > alphabet_size)
    throw DomainError("constraints: graph has more vertices than the alphabet has letters");
  for (const auto& b : occurrence_budgets) {
    if (b.formula.variable_count() > kMaxFormulaVariables)
      throw DomainError("constraints: formula " + b.formula.to_string() + " has too many variables");
  }
  for (const auto& f : forbidden_formulas) {
    if (f.variable_count() > kMaxFormulaVariables)
      throw DomainError("constraints: formula " + f.to_string() + " has too many variables");
  }
}

std::string ConstraintSet::to_string() const {
  std::ostringstream out;
  out << "alphabet " << alphabet_size << '\n';
  if (!forbidden_factors.empty()) {
    out << "forbid-factor";
    for (const Word& w : forbidden_factors) out << ' ' << w;
    out << '\n';
  }
  for (const Formula& f : forbidden_formulas) out << "forbid-formula " << f.to_string() << '\n';
  if (sq_min_period) out << "forbid-squares-min-period " << *sq_min_period << '\n';
  if (allowed_squares) {
    out << "allow-squares";
    for (const Word& w : *allowed_squares) out << ' ' << w;
    out << '\n';
  }
  if (allowed_overlaps) {
    out << "allow-overlaps";
    for (const Word& w : *allowed_overlaps) out << ' ' << w;
    out << '\n';
  }
  if (max_square_count) out << "max-distinct-squares " << *max_square_count << '\n';
  for (const auto& b : occurrence_budgets)
    out << "max-occurrences " << b.formula.to_string() << ' ' << b.max_distinct << '\n';
  if (exponent_cap)
    out << "exponent-cap " << exponent_cap->exponent << (exponent_cap->strict ? " strict" : " non-strict") << '\n';
  if (graph) out << "graph-edges " << graph->to_string() << '\n';
  return out.str();
}

ConstraintSet parse_constraints(std::string_view text) {
  ConstraintSet c;
  std::optional<int> alphabet;
  int top_letter = -1;
  auto word = [&](const std::string& tok, int line) {
    try {
      Word w = Word::parse(tok);
      top_letter = std::max(top_letter, w.max_letter());
      return w;
    } catch (const Error& e) {
      throw SyntaxError("constraints line " + std::to_string(line) + ": " + e.what());
    }
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    std::vector<std::string> args;
    for (std::string tok; ls >> tok;) args.push_back(tok);
    auto need_args = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi)
        throw SyntaxError("constraints line " + std::to_string(line_no) + ": wrong number of arguments for '" +
                          key + "'");
    };

    if (key == "alphabet") {
      need_args(1, 1);
      std::size_t k = parse_count(args[0], line_no);
      if (k < 1 || k > static_cast<std::size_t>(kMaxAlphabet))
        throw AlphabetError("constraints line " + std::to_string(line_no) + ": alphabet size must be 1..10");
      alphabet = static_cast<int>(k);
    } else if (key == "forbid-factor") {
      need_args(1, SIZE_MAX);
      for (const auto& a : args) c.forbidden_factors.push_back(word(a, line_no));
    } else if (key == "forbid-formula") {
      need_args(1, SIZE_MAX);
      for (const auto& a : args) c.forbidden_formulas.push_back(Formula::parse(a));
    } else if (key == "forbid-squares-min-period") {
      need_args(1, 1);
      c.sq_min_period = parse_count(args[0], line_no);
    } else if (key == "allow-squares") {
      if (!c.allowed_squares) c.allowed_squares.emplace();
      for (const auto& a : args) c.allowed_squares->insert(word(a, line_no));
    } else if (key == "allow-overlaps") {
      if (!c.allowed_overlaps) c.allowed_overlaps.emplace();
      for (const auto& a : args) c.allowed_overlaps->insert(word(a, line_no));
    } else if (key == "max-distinct-squares") {
      need_args(1, 1);
      c.max_square_count = parse_count(args[0], line_no);
    } else if (key == "max-occurrences") {
      need_args(2, 2);
      c.occurrence_budgets.push_back({Formula::parse(args[0]), parse_count(args[1], line_no)});
    } else if (key == "exponent-cap") {
      need_args(1, 2);
      bool strict = true;
      if (args.size() == 2) {
        if (args[1] == "strict")
          strict = true;
        else if (args[1] == "non-strict")
          strict = false;
        else
          throw SyntaxError("constraints line " + std::to_string(line_no) + ": expected strict or non-strict");
      }
      c.exponent_cap = ExponentCap{Rational::parse(args[0]), strict};
    } else if (key == "graph") {
      need_args(1, 1);
      c.graph = builtin_graph(args[0]);
    } else if (key == "graph-edges") {
      need_args(1, SIZE_MAX);
      std::string joined;
      for (const auto& a : args) joined += a + " ";
      c.graph = LabelledGraph::parse_edges(joined);
    } else {
      throw SyntaxError("constraints line " + std::to_string(line_no) + ": unknown directive '" + key + "'");
    }
  }
  if (alphabet) {
    c.alphabet_size = *alphabet;
  } else {
    c.alphabet_size = std::max(2, top_letter + 1);
    if (c.graph) c.alphabet_size = std::max(c.alphabet_size, c.graph->vertex_count());
  }
  c.validate();
  return c;
}

ConstraintSet load_constraints(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read constraint file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_constraints(buf.str());
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::alphabet: return "alphabet";
    case ViolationKind::graph_edge: return "graph-edge";
    case ViolationKind::forbidden_factor: return "factor";
    case ViolationKind::square_period: return "square-period";
    case ViolationKind::square_not_allowed: return "square";
    case ViolationKind::overlap_not_allowed: return "overlap";
    case ViolationKind::square_count: return "square-count";
    case ViolationKind::exponent: return "exponent";
    case ViolationKind::forbidden_formula: return "formula";
    case ViolationKind::occurrence_budget: return "occurrences";
  }
  return "?";
}

std::string Violation::to_string() const {
  std::string out = std::string(morphic::to_string(kind)) + " " + witness.str() + " (prefix " + std::to_string(end) + ")";
  if (!detail.empty()) out += " " + detail;
  return out;
}

// ---------------------------------------------------------------------------
// Whole-word check

namespace {

std::size_t count_occurrences(std::string_view prefix, const Formula& f) {
  if (prefix.empty()) return 0;
  detail::HashedText text(prefix);
  detail::FormulaSearch search(text, f, prefix.size(), kDefaultStepBudget);
  std::size_t count = 0;
  search.enumerate([&](const std::vector<detail::Binding>&) {
    ++count;
    return true;
  });
  return count;
}

// Smallest m in [1, n] with bad(m), given bad(n) and monotonicity.
template <class Pred>
std::size_t first_bad_prefix(std::size_t n, Pred bad) {
  std::size_t lo = 1, hi = n;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (bad(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace

std::optional<Violation> check(const Word& w, const ConstraintSet& c) {
  const std::string_view d = w.digits();
  const std::size_t n = d.size();
  std::optional<Violation> best;
  auto consider = [&](ViolationKind kind, std::size_t end, std::string_view witness, std::string detail = {}) {
    if (!best || end < best->end || (end == best->end && kind < best->kind))
      best = Violation{kind, end, Word::from_digits(std::string(witness)), std::move(detail)};
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] >= c.alphabet_size) {
      consider(ViolationKind::alphabet, i + 1, d.substr(i, 1));
      break;
    }
  }
  if (c.graph) {
    for (std::size_t i = 1; i < n; ++i) {
      int a = w[i - 1], b = w[i];
      if (a >= c.graph->vertex_count() || b >= c.graph->vertex_count() || !c.graph->has_edge(a, b)) {
        consider(ViolationKind::graph_edge, i + 1, d.substr(i - 1, 2));
        break;
      }
    }
  }
  for (const Word& f : c.forbidden_factors) {
    std::size_t pos = d.find(f.digits());
    if (pos != std::string_view::npos) consider(ViolationKind::forbidden_factor, pos + f.size(), f.digits());
  }

  if (c.sq_min_period || c.allowed_squares || c.max_square_count) {
    std::map<std::string_view, std::size_t> first_end;
    detail::for_each_run(
        d, 1, n / 2, [](std::size_t p) { return p; },
        [&](const detail::PeriodicRun& run) {
          const std::size_t p = run.period;
          if (c.sq_min_period && p >= *c.sq_min_period)
            consider(ViolationKind::square_period, run.start + 2 * p, d.substr(run.start, 2 * p));
          const std::size_t last = std::min(run.end - 2 * p, run.start + p - 1);
          for (std::size_t t = run.start; t <= last; ++t) {
            std::string_view sq = d.substr(t, 2 * p);
            if (c.allowed_squares && !c.allowed_squares->contains(Word::from_digits(std::string(sq))))
              consider(ViolationKind::square_not_allowed, t + 2 * p, sq);
            if (c.max_square_count) {
              auto [it, fresh] = first_end.emplace(sq, t + 2 * p);
              if (!fresh) it->second = std::min(it->second, t + 2 * p);
            }
          }
        });
    if (c.max_square_count && first_end.size() > *c.max_square_count) {
      std::vector<std::pair<std::size_t, std::string_view>> order;
      for (auto [sq, end] : first_end) order.emplace_back(end, sq);
      std::sort(order.begin(), order.end());
      const auto& [end, sq] = order[*c.max_square_count];
      consider(ViolationKind::square_count, end, sq,
               "(" + std::to_string(*c.max_square_count + 1) + " distinct squares)");
    }
  }

  if (c.allowed_overlaps) {
    detail::for_each_run(
        d, 1, n, [](std::size_t p) { return p + 1; },
        [&](const detail::PeriodicRun& run) {
          const std::size_t p = run.period;
          const std::size_t last = std::min(run.end - 2 * p - 1, run.start + p - 1);
          for (std::size_t t = run.start; t <= last; ++t) {
            std::string_view ov = d.substr(t, 2 * p + 1);
            if (!c.allowed_overlaps->contains(Word::from_digits(std::string(ov)))) {
              consider(ViolationKind::overlap_not_allowed, t + 2 * p + 1, ov);
              break;
            }
          }
        });
  }

  if (c.exponent_cap) {
    const ExponentCap cap = *c.exponent_cap;
    detail::for_each_run(
        d, 1, n, [&](std::size_t p) { return violating_overhang(cap.exponent, cap.strict, p); },
        [&](const detail::PeriodicRun& run) {
          const std::size_t len = run.period + violating_overhang(cap.exponent, cap.strict, run.period);
          consider(ViolationKind::exponent, run.start + len, d.substr(run.start, len),
                   "(period " + std::to_string(run.period) + ")");
        });
  }

  for (const Formula& f : c.forbidden_formulas) {
    if (avoids(w, f)) continue;
    std::size_t m = first_bad_prefix(n, [&](std::size_t len) { return !avoids(w.prefix(len), f); });
    if (best && best->end < m) continue;
    Word pre = w.prefix(m);
    auto occ = find_occurrences(pre, f, m);
    const Assignment& a = *occ.begin();
    consider(ViolationKind::forbidden_formula, m, fragment_images(f, a).front().digits(),
             f.to_string() + ": " + a.to_string());
  }

  for (const OccurrenceBudget& b : c.occurrence_budgets) {
    if (count_occurrences(d, b.formula) <= b.max_distinct) continue;
    std::size_t m = first_bad_prefix(
        n, [&](std::size_t len) { return count_occurrences(d.substr(0, len), b.formula) > b.max_distinct; });
    consider(ViolationKind::occurrence_budget, m, d.substr(0, m),
             "(more than " + std::to_string(b.max_distinct) + " occurrences of " + b.formula.to_string() + ")");
  }
  return best;
}

// ---------------------------------------------------------------------------
// Incremental checker

struct IncrementalChecker::State {
  ConstraintSet c;
  detail::HashedText text;
  std::vector<std::size_t> factor_lengths;
  std::unordered_map<std::size_t, std::unordered_set<std::string>> factors_by_length;
  bool scan_squares = false;
  std::unordered_set<std::string> squares_seen;
  std::vector<std::unordered_set<std::string>> budget_seen;
  // Keys added at each depth, for undo.
  std::vector<std::vector<std::string>> squares_added;
  std::vector<std::vector<std::pair<std::size_t, std::string>>> budget_added;

  bool evaluate();
};

bool IncrementalChecker::State::evaluate() {
  const std::string_view d = text.text();
  const std::size_t n = d.size();
  const int letter = d[n - 1] - '0';
  if (letter >= c.alphabet_size) return false;
  if (c.graph && n >= 2) {
    int a = d[n - 2] - '0';
    if (a >= c.graph->vertex_count() || letter >= c.graph->vertex_count() || !c.graph->has_edge(a, letter))
      return false;
  }
  for (std::size_t len : factor_lengths) {
    if (len <= n && factors_by_length[len].contains(std::string(d.substr(n - len)))) return false;
  }

  if (scan_squares || c.allowed_overlaps || c.exponent_cap) {
    const std::size_t max_p = c.exponent_cap ? n - 1 : n / 2;
    for (std::size_t p = 1; p <= max_p; ++p) {
      const bool sq_ok = scan_squares && 2 * p <= n;
      const bool ov_ok = c.allowed_overlaps && 2 * p + 1 <= n;
      std::size_t exp_r = 0;
      if (c.exponent_cap) {
        exp_r = violating_overhang(c.exponent_cap->exponent, c.exponent_cap->strict, p);
        if (p + exp_r > n) exp_r = 0;
      }
      std::size_t need = std::max({sq_ok ? p : 0, ov_ok ? p + 1 : 0, exp_r});
      if (need == 0) continue;
      std::size_t k = 0;
      while (k < need && d[n - 1 - k] == d[n - 1 - k - p]) ++k;
      if (exp_r && k >= exp_r) return false;
      if (sq_ok && k >= p) {
        if (c.sq_min_period && p >= *c.sq_min_period) return false;
        std::string sq(d.substr(n - 2 * p));
        if (c.allowed_squares && !c.allowed_squares->contains(Word::from_digits(sq))) return false;
        if (c.max_square_count && squares_seen.insert(sq).second) {
          squares_added.back().push_back(std::move(sq));
          if (squares_seen.size() > *c.max_square_count) return false;
        }
      }
      if (ov_ok && k >= p + 1 &&
          !c.allowed_overlaps->contains(Word::from_digits(std::string(d.substr(n - 2 * p - 1)))))
        return false;
    }
  }

  for (const Formula& f : c.forbidden_formulas) {
    detail::FormulaSearch search(text, f, n, kDefaultStepBudget);
    if (search.exists_ending_at(n)) return false;
  }

  for (std::size_t i = 0; i < c.occurrence_budgets.size(); ++i) {
    const OccurrenceBudget& b = c.occurrence_budgets[i];
    if (!b.formula.is_pattern()) {
      if (count_occurrences(d, b.formula) > b.max_distinct) return false;
      continue;
    }
    detail::FormulaSearch search(text, b.formula, n, kDefaultStepBudget);
    bool over = false;
    search.enumerate_anchored(0, n, [&](const std::vector<detail::Binding>& bindings) {
      std::string key;
      for (const auto& bd : bindings) {
        key.append(d.substr(bd.pos, bd.len));
        key.push_back('|');
      }
      if (budget_seen[i].insert(key).second) {
        budget_added.back().emplace_back(i, std::move(key));
        if (budget_seen[i].size() > b.max_distinct) {
          over = true;
          return false;
        }
      }
      return true;
    });
    if (over) return false;
  }
  return true;
}

IncrementalChecker::IncrementalChecker(const ConstraintSet& c) : state_(std::make_unique<State>()) {
  c.validate();
  state_->c = c;
  for (const Word& f : c.forbidden_factors) {
    if (state_->factors_by_length[f.size()].insert(f.str()).second &&
        std::find(state_->factor_lengths.begin(), state_->factor_lengths.end(), f.size()) ==
            state_->factor_lengths.end())
      state_->factor_lengths.push_back(f.size());
  }
  std::sort(state_->factor_lengths.begin(), state_->factor_lengths.end());
  state_->scan_squares = c.sq_min_period || c.allowed_squares || c.max_square_count;
  state_->budget_seen.resize(c.occurrence_budgets.size());
}

IncrementalChecker::~IncrementalChecker() = default;
IncrementalChecker::IncrementalChecker(IncrementalChecker&&) noexcept = default;
IncrementalChecker& IncrementalChecker::operator=(IncrementalChecker&&) noexcept = default;

bool IncrementalChecker::push(int letter) {
  state_->text.push(static_cast<char>('0' + letter));
  state_->squares_added.emplace_back();
  state_->budget_added.emplace_back();
  return state_->evaluate();
}

void IncrementalChecker::pop() {
  for (const std::string& sq : state_->squares_added.back()) state_->squares_seen.erase(sq);
  for (const auto& [i, key] : state_->budget_added.back()) state_->budget_seen[i].erase(key);
  state_->squares_added.pop_back();
  state_->budget_added.pop_back();
  state_->text.pop();
}

std::size_t IncrementalChecker::size() const { return state_->text.size(); }
std::string_view IncrementalChecker::word() const { return state_->text.text(); }
const ConstraintSet& IncrementalChecker::constraints() const { return state_->c; }

}  // namespace morphic
