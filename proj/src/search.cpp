#include "morphic/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace morphic {

namespace {

class BudgetExhausted : public std::exception {};

// Shared between workers of one search.
class Budget {
 public:
  explicit Budget(const SearchOptions& o) : opts_(o) {
    if (o.node_budget == 0) throw DomainError("search: node budget must be positive");
    if (o.time_limit_seconds > 0)
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(o.time_limit_seconds));
  }

  void tick(std::size_t depth) {
    std::uint64_t n = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > opts_.node_budget) throw BudgetExhausted();
    if ((n & 0xFFF) == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_) throw BudgetExhausted();
    if ((n & 0xFFFFF) == 0 && opts_.progress) opts_.progress(n, depth);
  }

  std::string reason() const {
    if (used_.load() > opts_.node_budget)
      return "node budget of " + std::to_string(opts_.node_budget) + " exhausted";
    return "time limit exhausted";
  }

 private:
  const SearchOptions& opts_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::atomic<std::uint64_t> used_{0};
};

std::vector<int> letter_order(const ConstraintSet& c, const SearchOptions& o) {
  std::vector<int> letters(static_cast<std::size_t>(c.alphabet_size));
  for (int a = 0; a < c.alphabet_size; ++a) letters[static_cast<std::size_t>(a)] = a;
  if (o.descending_letters) std::reverse(letters.begin(), letters.end());
  return letters;
}

// Visits every good word of length 1..max_depth below the current word of
// `ck`; visit(ck) returning false prunes the subtree.
template <class Visit>
void descend(IncrementalChecker& ck, std::size_t max_depth, const std::vector<int>& letters, Budget& budget,
             Visit& visit) {
  if (ck.size() >= max_depth) return;
  for (int a : letters) {
    budget.tick(ck.size() + 1);
    if (ck.push(a) && visit(ck)) descend(ck, max_depth, letters, budget, visit);
    ck.pop();
  }
}

// Runs the search, partitioned by prefixes over several workers when asked.
// Each task gets its own Result; `make_visitor(Result&)` builds the visitor.
// Merging must not depend on task order.
template <class Result, class MakeVisitor>
std::vector<Result> explore(const ConstraintSet& c, std::size_t max_depth, const SearchOptions& o, Budget& budget,
                            MakeVisitor make_visitor) {
  const std::vector<int> letters = letter_order(c, o);
  std::vector<Result> results(1);

  if (o.workers <= 1 || max_depth < 4) {
    IncrementalChecker ck(c);
    auto visit = make_visitor(results[0]);
    descend(ck, max_depth, letters, budget, visit);
    return results;
  }

  // Shallow part in this thread; collect surviving prefixes at split depth.
  const std::size_t split = std::min<std::size_t>(max_depth - 1, 10);
  std::vector<std::string> frontier;
  {
    IncrementalChecker ck(c);
    auto inner = make_visitor(results[0]);
    auto visit = [&](IncrementalChecker& k) {
      if (!inner(k)) return false;
      if (k.size() == split) {
        frontier.emplace_back(k.word());
        return false;
      }
      return true;
    };
    descend(ck, split, letters, budget, visit);
  }

  results.resize(frontier.size() + 1);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < frontier.size();) {
        IncrementalChecker ck(c);
        for (char ch : frontier[i]) ck.push(ch - '0');
        auto visit = make_visitor(results[i + 1]);
        descend(ck, max_depth, letters, budget, visit);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(frontier.size());
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < o.workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace

SearchOutcome longest_word_search(const ConstraintSet& c, std::size_t budget_length, const SearchOptions& opts) {
  if (budget_length == 0) throw DomainError("search: length budget must be positive");
  c.validate();
  Budget budget(opts);
  SearchOutcome best;
  best.witness = Word();
  const std::vector<int> letters = letter_order(c, opts);

  IncrementalChecker ck(c);
  struct Reached {};
  auto visit = [&](IncrementalChecker& k) {
    ++best.tree_nodes;
    if (k.size() > best.max_length) {
      best.max_length = k.size();
      best.witness = Word::from_digits(std::string(k.word()));
      if (best.max_length >= budget_length) throw Reached{};
    }
    return true;
  };
  try {
    descend(ck, budget_length, letters, budget, visit);
  } catch (const Reached&) {
    best.kind = SearchKind::reached_budget;
    return best;
  } catch (const BudgetExhausted&) {
    best.kind = SearchKind::reached_budget;
    throw SearchBudgetExceeded("search: " + budget.reason() + " (longest so far " +
                                   std::to_string(best.max_length) + ")",
                               best);
  }
  best.kind = SearchKind::exhausted;
  return best;
}

ExtendableSet extendable_set(const ConstraintSet& c, std::size_t L, std::size_t horizon, const SearchOptions& opts) {
  if (L == 0) throw DomainError("extendable_set: L must be at least 1");
  c.validate();
  Budget budget(opts);
  const std::size_t total = L + 2 * horizon;

  struct Result {
    std::unordered_map<std::string, std::string> found;  // middle -> witness
    std::uint64_t nodes = 0;
  };
  auto make_visitor = [&](Result& r) {
    return [&r, L, horizon, total](IncrementalChecker& k) {
      ++r.nodes;
      const std::size_t n = k.size();
      if (n == horizon + L) {
        // A middle with a witness already needs no further exploration.
        return !r.found.contains(std::string(k.word().substr(horizon)));
      }
      if (n == total) {
        r.found.emplace(std::string(k.word().substr(horizon, L)), std::string(k.word()));
        return false;
      }
      return true;
    };
  };

  std::vector<Result> parts;
  try {
    parts = explore<Result>(c, total, opts, budget, make_visitor);
  } catch (const BudgetExhausted&) {
    throw ResourceError("extendable_set: " + budget.reason());
  }

  std::map<std::string, std::string> merged;
  ExtendableSet out;
  for (const Result& r : parts) {
    out.tree_nodes += r.nodes;
    for (const auto& [mid, wit] : r.found) {
      auto [it, fresh] = merged.emplace(mid, wit);
      if (!fresh && wit < it->second) it->second = wit;
    }
  }
  for (auto& [mid, wit] : merged) {
    out.words.push_back(Word::from_digits(mid));
    out.witnesses.push_back(Word::from_digits(wit));
  }
  return out;
}

std::vector<std::uint64_t> count_by_length(const ConstraintSet& c, std::size_t n_max, const SearchOptions& opts) {
  if (n_max == 0) throw DomainError("count_by_length: n_max must be at least 1");
  c.validate();
  Budget budget(opts);
  using Result = std::vector<std::uint64_t>;
  auto make_visitor = [n_max](Result& r) {
    r.assign(n_max, 0);
    return [&r](IncrementalChecker& k) {
      ++r[k.size() - 1];
      return true;
    };
  };
  std::vector<Result> parts;
  try {
    parts = explore<Result>(c, n_max, opts, budget, make_visitor);
  } catch (const BudgetExhausted&) {
    throw ResourceError("count_by_length: " + budget.reason());
  }
  Result total(n_max, 0);
  for (const Result& r : parts)
    for (std::size_t i = 0; i < r.size(); ++i) total[i] += r[i];
  return total;
}

}  // namespace morphic
