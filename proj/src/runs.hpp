#pragma once

// Maximal periodic runs, found per period by sampling.

#include <cstddef>
#include <string_view>

namespace morphic::detail {

/// w[i] == w[i + period] for every start <= i < end - period; not extendable either way.
struct PeriodicRun {
  std::size_t start;
  std::size_t end;
  std::size_t period;
  std::size_t length() const { return end - start; }
};

/// Visits every maximal run of period p in [min_period, max_period] whose
/// length is at least p + overhang(p), where overhang(p) >= 1.
///
/// A run of length >= p + r contains r consecutive positions i with
/// w[i] == w[i+p], so sampling every r-th position finds it. Runs of one
/// period are separated by mismatches, which bounds the rescanning.
template <class Overhang, class Visit>
void for_each_run(std::string_view w, std::size_t min_period, std::size_t max_period, Overhang&& overhang,
                  Visit&& visit) {
  const std::size_t n = w.size();
  if (min_period == 0) min_period = 1;
  for (std::size_t p = min_period; p <= max_period && p < n; ++p) {
    const std::size_t r = overhang(p);
    if (r == 0 || p + r > n) continue;
    std::size_t q = 0;
    while (q + p < n) {
      if (w[q] != w[q + p]) {
        q += r;
        continue;
      }
      std::size_t b = q;
      while (b > 0 && w[b - 1] == w[b - 1 + p]) --b;
      std::size_t f = q + 1;
      while (f + p < n && w[f] == w[f + p]) ++f;
      if (f - b >= r) visit(PeriodicRun{b, f + p, p});
      q = (f / r + 1) * r;
    }
  }
}

}  // namespace morphic::detail
