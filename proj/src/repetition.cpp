#include "morphic/repetition.hpp"

#include <algorithm>
#include <string_view>
#include <tuple>

#include "morphic/error.hpp"
#include "runs.hpp"

namespace morphic {

using detail::for_each_run;
using detail::PeriodicRun;

namespace {

// Distinct factors of length span with period p inside runs; only the first
// p starts of a run can give new factors.
std::set<Word> periodic_inventory(const Word& w, std::size_t extra) {
  std::set<Word> out;
  std::string_view d = w.digits();
  for_each_run(
      d, 1, d.size(), [extra](std::size_t p) { return p + extra; },
      [&](const PeriodicRun& run) {
        const std::size_t span = 2 * run.period + extra;
        const std::size_t last = std::min(run.end - span, run.start + run.period - 1);
        for (std::size_t t = run.start; t <= last; ++t)
          out.insert(Word::from_digits(std::string(d.substr(t, span))));
      });
  return out;
}

}  // namespace

std::set<Word> distinct_squares(const Word& w) { return periodic_inventory(w, 0); }

std::set<Word> distinct_min_overlaps(const Word& w) { return periodic_inventory(w, 1); }

std::optional<Repetition> find_sq_t(const Word& w, std::size_t t) {
  std::optional<Repetition> best;
  for_each_run(
      w.digits(), std::max<std::size_t>(t, 1), w.size() / 2, [](std::size_t p) { return p; },
      [&](const PeriodicRun& run) {
        if (!best || std::tie(run.start, run.period) < std::tie(best->start, best->period))
          best = Repetition{run.start, run.period, 2 * run.period};
      });
  return best;
}

ExponentReport max_exponent(const Word& w) {
  const std::size_t n = w.size();
  if (n < 2) throw DomainError("max_exponent: word must have length at least 2");
  for (std::size_t shift = 0;; ++shift) {
    std::optional<Repetition> best;
    Rational best_e;
    bool finest = true;
    for_each_run(
        w.digits(), 1, n - 1,
        [&](std::size_t p) {
          std::size_t r = std::max<std::size_t>(1, (p + (std::size_t{1} << shift) - 1) >> shift);
          if (r > 1) finest = false;
          return r;
        },
        [&](const PeriodicRun& run) {
          Repetition rep{run.start, run.period, run.length()};
          Rational e = rep.exponent();
          if (!best || e > best_e ||
              (e == best_e && std::tie(rep.start, rep.period) < std::tie(best->start, best->period))) {
            best = rep;
            best_e = e;
          }
        });
    if (best) return {best_e, *best};
    if (finest || shift > 62) return {Rational(1, 1), Repetition{0, 1, 1}};
  }
}

std::size_t violating_overhang(const Rational& e, bool strict, std::size_t period) {
  // (e - 1) * p = (num - den) * p / den
  const auto excess = static_cast<unsigned __int128>(e.num() - e.den()) * period;
  const auto den = static_cast<unsigned __int128>(e.den());
  unsigned __int128 r = strict ? excess / den + 1 : (excess + den - 1) / den;
  return static_cast<std::size_t>(std::max<unsigned __int128>(r, 1));
}

std::optional<Repetition> find_exponent_violation(const Word& w, const Rational& e, bool strict) {
  if (e <= Rational(1, 1)) throw DomainError("exponent threshold must exceed 1");
  std::optional<Repetition> best;
  for_each_run(
      w.digits(), 1, w.size(), [&](std::size_t p) { return violating_overhang(e, strict, p); },
      [&](const PeriodicRun& run) {
        if (!best || std::tie(run.start, run.period) < std::tie(best->start, best->period))
          best = Repetition{run.start, run.period, run.length()};
      });
  return best;
}

}  // namespace morphic
