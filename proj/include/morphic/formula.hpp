#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "morphic/error.hpp"
#include "morphic/word.hpp"

namespace morphic {

/// Patterns with more distinct variables than this are refused by the
/// occurrence search; use find_sq_t or a localizer reduction instead.
inline constexpr int kMaxFormulaVariables = 6;

/// Dot-separated fragments over variables A..Z. A pattern is a formula
/// with a single fragment. Variables are renamed to A, B, ... in order of
/// first appearance.
class Formula {
 public:
  explicit Formula(std::vector<std::vector<int>> fragments);
  static Formula parse(std::string_view text);

  const std::vector<std::vector<int>>& fragments() const { return fragments_; }
  int variable_count() const { return variable_count_; }
  bool is_pattern() const { return fragments_.size() == 1; }
  std::size_t longest_fragment() const;

  std::string to_string() const;

  friend bool operator==(const Formula&, const Formula&) = default;
  friend auto operator<=>(const Formula&, const Formula&) = default;

 private:
  std::vector<std::vector<int>> fragments_;
  int variable_count_ = 0;
};

/// Images of the variables of an occurrence, indexed by variable.
struct Assignment {
  std::vector<Word> images;

  /// "A=0, B=10"
  std::string to_string() const;
  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// Images h(fragment) of every fragment, in fragment order.
std::vector<Word> fragment_images(const Formula& f, const Assignment& a);

/// Default limit on backtracking steps of one occurrence search.
inline constexpr std::uint64_t kDefaultStepBudget = std::uint64_t{1} << 40;

class OccurrenceBudgetExceeded : public ResourceError {
 public:
  OccurrenceBudgetExceeded(const std::string& what, std::set<Assignment> partial)
      : ResourceError(what), partial_(std::move(partial)) {}
  /// Assignments found before the budget ran out.
  const std::set<Assignment>& partial() const { return partial_; }

 private:
  std::set<Assignment> partial_;
};

/// Every assignment with images of length <= cap whose fragment images
/// are all factors of w. Throws DomainError for formulas with more than
/// kMaxFormulaVariables variables and OccurrenceBudgetExceeded when the
/// step budget runs out.
std::set<Assignment> find_occurrences(const Word& w, const Formula& f, std::size_t cap,
                                      std::uint64_t step_budget = kDefaultStepBudget);

/// True iff w has no occurrence of f (images up to length |w|).
bool avoids(const Word& w, const Formula& f, std::uint64_t step_budget = kDefaultStepBudget);

/// No variable occurs exactly once.
bool is_doubled(const Formula& f);

}  // namespace morphic
