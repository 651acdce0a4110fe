#pragma once

// Occurrence search for formulas over a hashed text.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "morphic/formula.hpp"

namespace morphic::detail {

/// Polynomial hash modulo 2^61 - 1 over a text that may grow and shrink at
/// the end. Equality tests confirm hash hits with a direct comparison.
class HashedText {
 public:
  HashedText() : prefix_{0}, power_{1} {}
  explicit HashedText(std::string_view text) : HashedText() {
    for (char c : text) push(c);
  }

  void push(char c);
  void pop() {
    text_.pop_back();
    prefix_.pop_back();
  }

  std::size_t size() const { return text_.size(); }
  std::string_view text() const { return text_; }

  std::uint64_t hash(std::size_t pos, std::size_t len) const;
  std::uint64_t power(std::size_t k) const { return power_[k]; }

  /// hash(xy) from hash(x), hash(y) and |y|.
  std::uint64_t concat(std::uint64_t hx, std::uint64_t hy, std::size_t len_y) const;

  bool equal(std::size_t a, std::size_t b, std::size_t len) const {
    return hash(a, len) == hash(b, len) && text_.compare(a, len, text_, b, len) == 0;
  }

 private:
  std::string text_;
  std::vector<std::uint64_t> prefix_;
  mutable std::vector<std::uint64_t> power_;
};

/// Image of a variable as a factor text[pos, pos+len).
struct Binding {
  std::size_t pos = 0;
  std::size_t len = 0;
  std::uint64_t hash = 0;
  int level = -1;  // fragment depth that bound it; -1 = unbound
  bool bound() const { return level >= 0; }
};

/// Up to kMaxFormulaVariables (hash, length) pairs identifying image words.
struct ImageTuple {
  std::array<std::uint64_t, 2 * kMaxFormulaVariables> v{};
  std::size_t n = 0;
  void add(const Binding& b) {
    v[n++] = b.hash;
    v[n++] = b.len;
  }
  friend bool operator==(const ImageTuple&, const ImageTuple&) = default;
};

struct ImageTupleHash {
  std::size_t operator()(const ImageTuple& t) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < t.n; ++i) {
      h ^= t.v[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

/// Backtracking search for occurrences of one formula in one text.
///
/// Fragments are processed one at a time, most-constrained first. A
/// fragment's occurrences are found by anchoring one variable occurrence
/// and growing the matched span outward; every variable occurrence whose
/// position becomes known is checked immediately. Each distinct tuple of
/// newly bound images is explored once.
class FormulaSearch {
 public:
  /// Return false to stop the search.
  using Visitor = std::function<bool(const std::vector<Binding>&)>;

  FormulaSearch(const HashedText& text, const Formula& formula, std::size_t cap, std::uint64_t step_budget);

  /// Visits every distinct assignment. Returns false if stopped early.
  bool enumerate(const Visitor& visit);

  /// Visits assignments in which fragment `anchor` has an image ending at `end`.
  bool enumerate_anchored(std::size_t anchor, std::size_t end, const Visitor& visit);

  /// Some occurrence has a fragment image ending exactly at `end`.
  bool exists_ending_at(std::size_t end);

  std::uint64_t steps() const { return steps_; }

 private:
  struct FragmentFrame;

  bool solve(std::uint32_t done, int depth, std::optional<std::size_t> anchor_frag, std::size_t anchor_end,
             const Visitor& visit);
  std::size_t pick_fragment(std::uint32_t done) const;
  bool fragment_present(const std::vector<int>& frag);
  bool match_fragment(FragmentFrame& fr);
  bool square_anchor(FragmentFrame& fr, std::size_t k, std::size_t u);
  bool split_period(FragmentFrame& fr, std::size_t k, std::size_t u, std::size_t i, std::size_t pos,
                    std::size_t start, std::size_t period);
  bool expand(FragmentFrame& fr, std::size_t lo, std::size_t hi, std::size_t pos_lo, std::size_t pos_hi);
  bool branch_right(FragmentFrame& fr, std::size_t lo, std::size_t hi, std::size_t pos_lo, std::size_t pos_hi);
  bool branch_left(FragmentFrame& fr, std::size_t lo, std::size_t hi, std::size_t pos_lo, std::size_t pos_hi);
  bool matches_at(int var, std::size_t pos) const;
  const std::vector<std::size_t>& occurrences_of(int var);
  void bind(int var, std::size_t pos, std::size_t len, int level);
  void tick();

  const HashedText& text_;
  const Formula& formula_;
  std::size_t cap_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<Binding> bindings_;
  std::unordered_map<ImageTuple, std::vector<std::size_t>, ImageTupleHash> occurrence_cache_;
};

}  // namespace morphic::detail
