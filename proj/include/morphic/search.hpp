#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "morphic/constraints.hpp"
#include "morphic/error.hpp"
#include "morphic/word.hpp"

namespace morphic {

inline constexpr std::uint64_t kDefaultNodeBudget = std::uint64_t{1} << 32;

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;  // letter appends tried
  double time_limit_seconds = 0;                   // 0 = none
  unsigned workers = 1;
  bool descending_letters = false;
  // Called from search threads roughly every million nodes.
  std::function<void(std::uint64_t nodes, std::size_t depth)> progress;
};

enum class SearchKind { reached_budget, exhausted };

struct SearchOutcome {
  SearchKind kind = SearchKind::exhausted;
  std::size_t max_length = 0;
  std::optional<Word> witness;
  std::uint64_t tree_nodes = 0;  // good words visited
};

/// Thrown when the node budget or time limit runs out during
/// longest_word_search; carries the longest word found so far.
class SearchBudgetExceeded : public ResourceError {
 public:
  SearchBudgetExceeded(const std::string& what, SearchOutcome best) : ResourceError(what), best_(std::move(best)) {}
  const SearchOutcome& best() const { return best_; }

 private:
  SearchOutcome best_;
};

/// Depth-first search for a longest good word, stopping at budget_length.
/// When exhausted, the witness is the lexicographically first longest word.
SearchOutcome longest_word_search(const ConstraintSet& c, std::size_t budget_length, const SearchOptions& opts = {});

struct ExtendableSet {
  std::vector<Word> words;      // sorted
  std::vector<Word> witnesses;  // witnesses[i] = p.words[i].s, good, |p| = |s| = horizon
  std::uint64_t tree_nodes = 0;
};

/// The words v of length L that occur as the exact middle of a good word
/// of length L + 2 horizon. Throws ResourceError when the budget runs out.
ExtendableSet extendable_set(const ConstraintSet& c, std::size_t L, std::size_t horizon,
                             const SearchOptions& opts = {});

/// counts[n-1] = number of good words of length n, for n = 1..n_max.
std::vector<std::uint64_t> count_by_length(const ConstraintSet& c, std::size_t n_max, const SearchOptions& opts = {});

}  // namespace morphic
