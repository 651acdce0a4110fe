#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "morphic/formula.hpp"
#include "morphic/graph.hpp"
#include "morphic/rational.hpp"
#include "morphic/word.hpp"

namespace morphic {

struct OccurrenceBudget {
  Formula formula;
  std::size_t max_distinct = 0;
  friend bool operator==(const OccurrenceBudget&, const OccurrenceBudget&) = default;
};

struct ExponentCap {
  Rational exponent;
  bool strict = true;  // forbid exponents > e; otherwise forbid >= e
  friend bool operator==(const ExponentCap&, const ExponentCap&) = default;
};

/// A factorial language given by avoidance constraints. A word is good when
/// it violates none of them.
struct ConstraintSet {
  int alphabet_size = 2;
  std::vector<Word> forbidden_factors;
  std::vector<Formula> forbidden_formulas;
  std::optional<std::size_t> sq_min_period;   // forbid squares with period >= t
  std::optional<std::set<Word>> allowed_squares;
  std::optional<std::set<Word>> allowed_overlaps;  // minimal overlaps (length 2p+1)
  std::optional<std::size_t> max_square_count;
  std::vector<OccurrenceBudget> occurrence_budgets;
  std::optional<ExponentCap> exponent_cap;
  std::optional<LabelledGraph> graph;

  /// Checks internal consistency: letters in range, whitelists hold genuine
  /// squares / minimal overlaps. Throws DomainError.
  void validate() const;

  /// Line-oriented text form (see parse_constraints).
  std::string to_string() const;
};

/// Parses the constraint file format:
///   alphabet 2
///   forbid-factor 010 212
///   forbid-formula AA.ABAB.BB
///   forbid-squares-min-period 4
///   allow-squares 00 11 001001 110110
///   allow-overlaps 01010
///   max-distinct-squares 11
///   max-occurrences ABBA 8
///   exponent-cap 5/3 strict
///   graph P5          or   graph-edges 0-1 1-2 2-2
/// Blank lines and lines starting with '#' are ignored.
ConstraintSet parse_constraints(std::string_view text);
ConstraintSet load_constraints(const std::string& path);

enum class ViolationKind {
  alphabet,
  graph_edge,
  forbidden_factor,
  square_period,
  square_not_allowed,
  overlap_not_allowed,
  square_count,
  exponent,
  forbidden_formula,
  occurrence_budget,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t end = 0;  // prefix length at which the violation is complete
  Word witness;         // offending factor
  std::string detail;   // e.g. the formula and assignment

  std::string to_string() const;
};

/// The violation that completes at the shortest prefix of w (ties broken by
/// kind order), or nothing if w is good.
std::optional<Violation> check(const Word& w, const ConstraintSet& c);

/// Constraint checking for a word that grows and shrinks at its end, as in
/// a depth-first search. Every push re-checks only what can complete at the
/// new last letter; formula constraints are searched exactly with one
/// fragment image anchored at the end.
class IncrementalChecker {
 public:
  explicit IncrementalChecker(const ConstraintSet& c);
  ~IncrementalChecker();
  IncrementalChecker(IncrementalChecker&&) noexcept;
  IncrementalChecker& operator=(IncrementalChecker&&) noexcept;

  /// Appends a letter; returns false if the longer word is bad. The letter
  /// stays appended either way; undo with pop().
  bool push(int letter);
  void pop();

  std::size_t size() const;
  std::string_view word() const;
  const ConstraintSet& constraints() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

}  // namespace morphic
