#pragma once

#include <cstddef>
#include <optional>
#include <set>

#include "morphic/rational.hpp"
#include "morphic/word.hpp"

namespace morphic {

/// The factor [start, start+length) of some word, with period `period`.
struct Repetition {
  std::size_t start = 0;
  std::size_t period = 1;
  std::size_t length = 1;

  Rational exponent() const {
    return Rational(static_cast<std::int64_t>(length), static_cast<std::int64_t>(period));
  }
  friend bool operator==(const Repetition&, const Repetition&) = default;
};

/// Distinct factors uu (u non-empty). 00 and 0000 are separate entries.
std::set<Word> distinct_squares(const Word& w);

/// Distinct factors of length 2p+1 with period p, for any p >= 1.
std::set<Word> distinct_min_overlaps(const Word& w);

/// Leftmost (then shortest-period) square with period >= t.
std::optional<Repetition> find_sq_t(const Word& w, std::size_t t);

struct ExponentReport {
  Rational exponent;
  Repetition witness;
};

/// Largest |r|/|u| over the repetitions of w. Ties go to the smallest
/// start, then the smallest period. Throws DomainError if |w| < 2.
ExponentReport max_exponent(const Word& w);

/// A maximal repetition of exponent > e (strict) or >= e (non-strict), or
/// nothing if w is e+-free / e-free. Requires e > 1.
std::optional<Repetition> find_exponent_violation(const Word& w, const Rational& e, bool strict);

/// Smallest run overhang r such that a run of period p and length >= p + r
/// has exponent > e (strict) or >= e.
std::size_t violating_overhang(const Rational& e, bool strict, std::size_t period);

}  // namespace morphic
