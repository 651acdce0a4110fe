// Definition-level goodness test for a constraint set, built from the
// brute-force oracles only.
#pragma once

#include <string>

#include "morphic/constraints.hpp"
#include "oracles.hpp"

inline bool naive_good(const std::string& w, const morphic::ConstraintSet& c) {
  for (char ch : w)
    if (ch - '0' >= c.alphabet_size) return false;
  if (c.graph)
    for (std::size_t i = 1; i < w.size(); ++i)
      if (!c.graph->has_edge(w[i - 1] - '0', w[i] - '0')) return false;
  for (const auto& f : c.forbidden_factors)
    if (oracle::is_factor(w, f.str())) return false;
  const auto sq = oracle::squares(w);
  if (c.sq_min_period)
    for (const auto& s : sq)
      if (s.size() / 2 >= *c.sq_min_period) return false;
  if (c.allowed_squares)
    for (const auto& s : sq)
      if (!c.allowed_squares->count(morphic::Word::from_digits(s))) return false;
  if (c.max_square_count && sq.size() > *c.max_square_count) return false;
  if (c.allowed_overlaps)
    for (const auto& s : oracle::min_overlaps(w))
      if (!c.allowed_overlaps->count(morphic::Word::from_digits(s))) return false;
  if (c.exponent_cap && w.size() >= 2) {
    auto [num, den] = oracle::max_exponent(w);
    const auto& e = c.exponent_cap->exponent;
    const auto lhs = num * e.den(), rhs = e.num() * den;
    if (c.exponent_cap->strict ? lhs > rhs : lhs >= rhs) return false;
  }
  for (const auto& f : c.forbidden_formulas)
    if (!oracle::occurrences(w, oracle::parse_formula(f.to_string()), w.size()).empty()) return false;
  for (const auto& b : c.occurrence_budgets)
    if (oracle::occurrences(w, oracle::parse_formula(b.formula.to_string()), w.size()).size() > b.max_distinct)
      return false;
  return true;
}
