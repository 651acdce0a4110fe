#include "matcher.hpp"

#include <algorithm>

#include "morphic/error.hpp"
#include "runs.hpp"

namespace morphic::detail {

namespace {

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBase = 0x1f3d5b79a4c1ULL % kMod;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 c = static_cast<unsigned __int128>(a) * b;
  std::uint64_t x = static_cast<std::uint64_t>(c & kMod) + static_cast<std::uint64_t>(c >> 61);
  while (x >= kMod) x -= kMod;
  return x;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + b;
  return x >= kMod ? x - kMod : x;
}

constexpr std::size_t kShortText = 256;

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kMod - b; }

}  // namespace

void HashedText::push(char c) {
  text_.push_back(c);
  prefix_.push_back(add_mod(mul_mod(prefix_.back(), kBase), static_cast<std::uint64_t>(c - '0' + 1)));
  while (power_.size() <= text_.size()) power_.push_back(mul_mod(power_.back(), kBase));
}

std::uint64_t HashedText::hash(std::size_t pos, std::size_t len) const {
  return sub_mod(prefix_[pos + len], mul_mod(prefix_[pos], power_[len]));
}

std::uint64_t HashedText::concat(std::uint64_t hx, std::uint64_t hy, std::size_t len_y) const {
  while (power_.size() <= len_y) power_.push_back(mul_mod(power_.back(), kBase));
  return add_mod(mul_mod(hx, power_[len_y]), hy);
}

struct FormulaSearch::FragmentFrame {
  const std::vector<int>* vars = nullptr;
  int depth = 0;
  std::optional<std::size_t> end;
  std::vector<int> new_vars;
  std::unordered_set<ImageTuple, ImageTupleHash> seen;
  std::function<bool()> on_tuple;
};

FormulaSearch::FormulaSearch(const HashedText& text, const Formula& formula, std::size_t cap,
                             std::uint64_t step_budget)
    : text_(text),
      formula_(formula),
      cap_(cap),
      budget_(step_budget),
      bindings_(static_cast<std::size_t>(formula.variable_count())) {
  if (formula.variable_count() > kMaxFormulaVariables)
    throw DomainError("formula " + formula.to_string() + " has " + std::to_string(formula.variable_count()) +
                      " variables; at most " + std::to_string(kMaxFormulaVariables) +
                      " are supported (use a square search or a localizer reduction instead)");
  if (formula.fragments().size() > 31) throw DomainError("formula has too many fragments");
}

void FormulaSearch::tick() {
  if (++steps_ > budget_) throw ResourceError("occurrence search exceeded its step budget");
}

void FormulaSearch::bind(int var, std::size_t pos, std::size_t len, int level) {
  Binding& b = bindings_[static_cast<std::size_t>(var)];
  b.pos = pos;
  b.len = len;
  b.hash = text_.hash(pos, len);
  b.level = level;
}

bool FormulaSearch::matches_at(int var, std::size_t pos) const {
  const Binding& b = bindings_[static_cast<std::size_t>(var)];
  if (pos + b.len > text_.size()) return false;
  return text_.hash(pos, b.len) == b.hash && text_.text().compare(pos, b.len, text_.text(), b.pos, b.len) == 0;
}

const std::vector<std::size_t>& FormulaSearch::occurrences_of(int var) {
  const Binding& b = bindings_[static_cast<std::size_t>(var)];
  ImageTuple key;
  key.add(b);
  auto it = occurrence_cache_.find(key);
  if (it != occurrence_cache_.end()) return it->second;
  std::vector<std::size_t> occ;
  for (std::size_t j = 0; j + b.len <= text_.size(); ++j) {
    if (matches_at(var, j)) occ.push_back(j);
  }
  steps_ += text_.size() / 64;
  return occurrence_cache_.emplace(std::move(key), std::move(occ)).first->second;
}

bool FormulaSearch::enumerate(const Visitor& visit) { return solve(0, 0, std::nullopt, 0, visit); }

bool FormulaSearch::enumerate_anchored(std::size_t anchor, std::size_t end, const Visitor& visit) {
  return solve(0, 0, anchor, end, visit);
}

bool FormulaSearch::exists_ending_at(std::size_t end) {
  const Visitor stop = [](const std::vector<Binding>&) { return false; };
  for (std::size_t f = 0; f < formula_.fragments().size(); ++f) {
    if (!solve(0, 0, f, end, stop)) return true;
  }
  return false;
}

std::size_t FormulaSearch::pick_fragment(std::uint32_t done) const {
  const auto& frags = formula_.fragments();
  std::size_t best = frags.size();
  int best_free = 0;
  for (std::size_t f = 0; f < frags.size(); ++f) {
    if (done & (1u << f)) continue;
    std::uint32_t free_mask = 0;
    for (int v : frags[f]) {
      if (!bindings_[static_cast<std::size_t>(v)].bound()) free_mask |= 1u << v;
    }
    int free = __builtin_popcount(free_mask);
    if (best == frags.size() || free < best_free || (free == best_free && frags[f].size() > frags[best].size())) {
      best = f;
      best_free = free;
    }
  }
  return best;
}

bool FormulaSearch::solve(std::uint32_t done, int depth, std::optional<std::size_t> anchor_frag,
                          std::size_t anchor_end, const Visitor& visit) {
  const auto& frags = formula_.fragments();
  const std::uint32_t all = frags.size() >= 32 ? ~0u : (1u << frags.size()) - 1;
  if (done == all) return visit(bindings_);
  const std::size_t fi = anchor_frag ? *anchor_frag : pick_fragment(done);
  const std::vector<int>& frag = frags[fi];
  if (!anchor_frag && std::all_of(frag.begin(), frag.end(),
                                  [&](int v) { return bindings_[static_cast<std::size_t>(v)].bound(); })) {
    tick();
    if (!fragment_present(frag)) return true;
    return solve(done | (1u << fi), depth + 1, std::nullopt, 0, visit);
  }

  FragmentFrame fr;
  fr.vars = &frag;
  fr.depth = depth;
  if (anchor_frag) fr.end = anchor_end;
  for (int v : frag) {
    if (!bindings_[static_cast<std::size_t>(v)].bound() &&
        std::find(fr.new_vars.begin(), fr.new_vars.end(), v) == fr.new_vars.end())
      fr.new_vars.push_back(v);
  }
  fr.on_tuple = [&, fi]() { return solve(done | (1u << fi), depth + 1, std::nullopt, 0, visit); };
  return match_fragment(fr);
}

bool FormulaSearch::fragment_present(const std::vector<int>& frag) {
  // Anchor on the variable with the longest image and test each of its occurrences.
  std::size_t total = 0;
  std::size_t best_index = 0;
  std::size_t offset = 0;
  std::size_t best_offset = 0;
  for (std::size_t i = 0; i < frag.size(); ++i) {
    const Binding& b = bindings_[static_cast<std::size_t>(frag[i])];
    if (b.len > bindings_[static_cast<std::size_t>(frag[best_index])].len) {
      best_index = i;
      best_offset = offset;
    }
    offset += b.len;
    total += b.len;
  }
  if (total > text_.size()) return false;
  if (text_.size() <= kShortText) {
    // Short text: compare the hash of the whole image at every position.
    std::uint64_t h = 0;
    for (int v : frag) {
      const Binding& b = bindings_[static_cast<std::size_t>(v)];
      h = text_.concat(h, b.hash, b.len);
    }
    for (std::size_t start = 0; start + total <= text_.size(); ++start) {
      if (text_.hash(start, total) != h) continue;
      std::size_t pos = start;
      bool ok = true;
      for (int v : frag) {
        if (!matches_at(v, pos)) {
          ok = false;
          break;
        }
        pos += bindings_[static_cast<std::size_t>(v)].len;
      }
      if (ok) return true;
    }
    return false;
  }
  for (std::size_t q : occurrences_of(frag[best_index])) {
    if (q < best_offset) continue;
    std::size_t start = q - best_offset;
    if (start + total > text_.size()) break;
    std::size_t pos = start;
    bool ok = true;
    for (int v : frag) {
      if (!matches_at(v, pos)) {
        ok = false;
        break;
      }
      pos += bindings_[static_cast<std::size_t>(v)].len;
    }
    if (ok) return true;
  }
  return false;
}

bool FormulaSearch::match_fragment(FragmentFrame& fr) {
  const std::vector<int>& vars = *fr.vars;
  const std::size_t m = vars.size();
  const std::size_t n = text_.size();
  auto minlen = [&](int v) {
    const Binding& b = bindings_[static_cast<std::size_t>(v)];
    return b.bound() ? b.len : std::size_t{1};
  };

  if (fr.end) {
    const std::size_t e = *fr.end;
    const int v = vars[m - 1];
    if (bindings_[static_cast<std::size_t>(v)].bound()) {
      const std::size_t len = bindings_[static_cast<std::size_t>(v)].len;
      if (len > e || !matches_at(v, e - len)) return true;
      return expand(fr, m - 1, m, e - len, e);
    }
    std::size_t cnt_v = 0, other = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (vars[i] == v)
        ++cnt_v;
      else
        other += minlen(vars[i]);
    }
    for (std::size_t len = 1; len <= cap_ && len <= e; ++len) {
      if (len * cnt_v + other > e - len) break;
      bind(v, e - len, len, fr.depth);
      bool go = expand(fr, m - 1, m, e - len, e);
      bindings_[static_cast<std::size_t>(v)].level = -1;
      if (!go) return false;
    }
    return true;
  }

  // Free anchor: a bound variable if there is one, else the longest block.
  int anchor_var = -1;
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Binding& b = bindings_[static_cast<std::size_t>(vars[i])];
    if (b.bound() && (anchor_var < 0 || b.len > bindings_[static_cast<std::size_t>(anchor_var)].len)) {
      anchor_var = vars[i];
      k = i;
    }
  }
  if (anchor_var >= 0) {
    const std::size_t len = bindings_[static_cast<std::size_t>(anchor_var)].len;
    // Cache entries are never erased, so the reference survives nested searches.
    const std::vector<std::size_t>& occ = occurrences_of(anchor_var);
    for (std::size_t q : occ) {
      if (!expand(fr, k, k + 1, q, q + len)) return false;
    }
    return true;
  }

  std::size_t best_block = 0;
  std::size_t best_mult = 0;
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i;
    while (j < m && vars[j] == vars[i]) ++j;
    std::size_t mult = static_cast<std::size_t>(std::count(vars.begin(), vars.end(), vars[i]));
    if (j - i > best_block || (j - i == best_block && mult > best_mult)) {
      best_block = j - i;
      best_mult = mult;
      k = i;
    }
    i = j;
  }
  if (best_block == 1) {
    // No repeated letter: anchor on a square block UU instead, if any.
    for (std::size_t u = 2; 2 * u <= m; ++u)
      for (std::size_t s = 0; s + 2 * u <= m; ++s)
        if (std::equal(vars.begin() + static_cast<std::ptrdiff_t>(s), vars.begin() + static_cast<std::ptrdiff_t>(s + u),
                       vars.begin() + static_cast<std::ptrdiff_t>(s + u)))
          return square_anchor(fr, s, u);
  }
  const int v = vars[k];
  for (std::size_t len = 1; len <= cap_; ++len) {
    std::size_t left = 0, right = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == k) continue;
      std::size_t l = vars[i] == v ? len : minlen(vars[i]);
      (i < k ? left : right) += l;
    }
    if (left + len + right > n) break;
    for (std::size_t j = left; j + len + right <= n; ++j) {
      tick();
      bind(v, j, len, fr.depth);
      bool go = expand(fr, k, k + 1, j, j + len);
      bindings_[static_cast<std::size_t>(v)].level = -1;
      if (!go) return false;
    }
  }
  return true;
}

// Images of UU = vars[k, k + 2u) are squares of the text, so every
// occurrence lies on a square found by the run scan.
bool FormulaSearch::square_anchor(FragmentFrame& fr, std::size_t k, std::size_t u) {
  const std::size_t m = fr.vars->size();
  const std::size_t n = text_.size();
  const std::size_t right = m - k - 2 * u;
  bool go = true;
  const std::size_t max_period = std::min(n / 2, u * std::min(cap_, n));
  for_each_run(
      text_.text(), u, max_period, [](std::size_t p) { return p; },
      [&](const PeriodicRun& run) {
        const std::size_t p = run.period;
        for (std::size_t t = std::max(run.start, k); go && t + 2 * p <= run.end; ++t) {
          if (t + 2 * p + right > n) break;
          tick();
          go = split_period(fr, k, u, 0, t, t, p);
        }
      });
  return go;
}

bool FormulaSearch::split_period(FragmentFrame& fr, std::size_t k, std::size_t u, std::size_t i, std::size_t pos,
                                 std::size_t start, std::size_t period) {
  const std::size_t stop = start + period;
  if (i == u) return pos != stop || expand(fr, k, k + 2 * u, start, start + 2 * period);
  const int v = (*fr.vars)[k + i];
  Binding& b = bindings_[static_cast<std::size_t>(v)];
  if (b.bound()) {
    if (pos + b.len > stop || !matches_at(v, pos)) return true;
    return split_period(fr, k, u, i + 1, pos + b.len, start, period);
  }
  const std::size_t rest = u - i - 1;
  for (std::size_t len = 1; len <= cap_ && pos + len + rest <= stop; ++len) {
    tick();
    bind(v, pos, len, fr.depth);
    bool go = split_period(fr, k, u, i + 1, pos + len, start, period);
    b.level = -1;
    if (!go) return false;
  }
  return true;
}

bool FormulaSearch::expand(FragmentFrame& fr, std::size_t lo, std::size_t hi, std::size_t pos_lo,
                           std::size_t pos_hi) {
  tick();
  const std::vector<int>& vars = *fr.vars;
  const std::size_t m = vars.size();
  if (lo == 0 && hi == m) {
    ImageTuple key;
    for (int v : fr.new_vars) key.add(bindings_[static_cast<std::size_t>(v)]);
    if (!fr.seen.insert(key).second) return true;
    return fr.on_tuple();
  }
  if (hi < m && bindings_[static_cast<std::size_t>(vars[hi])].bound()) {
    const int v = vars[hi];
    if (!matches_at(v, pos_hi)) return true;
    return expand(fr, lo, hi + 1, pos_lo, pos_hi + bindings_[static_cast<std::size_t>(v)].len);
  }
  if (lo > 0 && bindings_[static_cast<std::size_t>(vars[lo - 1])].bound()) {
    const int v = vars[lo - 1];
    const std::size_t len = bindings_[static_cast<std::size_t>(v)].len;
    if (len > pos_lo || !matches_at(v, pos_lo - len)) return true;
    return expand(fr, lo - 1, hi, pos_lo - len, pos_hi);
  }
  if (hi == m) return branch_left(fr, lo, hi, pos_lo, pos_hi);
  if (lo == 0) return branch_right(fr, lo, hi, pos_lo, pos_hi);
  auto mult = [&](int v) { return std::count(vars.begin(), vars.end(), v); };
  if (mult(vars[hi]) >= mult(vars[lo - 1])) return branch_right(fr, lo, hi, pos_lo, pos_hi);
  return branch_left(fr, lo, hi, pos_lo, pos_hi);
}

namespace {

// Lengths already committed outside [lo, hi) when variable v gets length len.
struct SideNeeds {
  std::size_t left_v = 0, left_other = 0, right_v = 0, right_other = 0;
};

}  // namespace

bool FormulaSearch::branch_right(FragmentFrame& fr, std::size_t lo, std::size_t hi, std::size_t pos_lo,
                                 std::size_t pos_hi) {
  const std::vector<int>& vars = *fr.vars;
  const std::size_t m = vars.size();
  const std::size_t n = text_.size();
  const int v = vars[hi];
  SideNeeds need;
  for (std::size_t i = 0; i < m; ++i) {
    if (i >= lo && i <= hi) continue;
    const Binding& b = bindings_[static_cast<std::size_t>(vars[i])];
    bool left = i < lo;
    if (vars[i] == v)
      ++(left ? need.left_v : need.right_v);
    else
      (left ? need.left_other : need.right_other) += b.bound() ? b.len : 1;
  }
  auto fits = [&](std::size_t len) {
    return len <= cap_ && pos_hi + len * (1 + need.right_v) + need.right_other <= n &&
           len * need.left_v + need.left_other <= pos_lo;
  };
  auto try_len = [&](std::size_t len) {
    bind(v, pos_hi, len, fr.depth);
    bool go = expand(fr, lo, hi + 1, pos_lo, pos_hi + len);
    bindings_[static_cast<std::size_t>(v)].level = -1;
    return go;
  };

  if (hi + 1 < m && vars[hi + 1] != v) {
    const Binding& next = bindings_[static_cast<std::size_t>(vars[hi + 1])];
    if (next.bound() && next.level < fr.depth) {
      const std::vector<std::size_t>& occ = occurrences_of(vars[hi + 1]);
      for (auto it = std::upper_bound(occ.begin(), occ.end(), pos_hi); it != occ.end(); ++it) {
        const std::size_t len = *it - pos_hi;
        if (!fits(len)) break;
        if (!try_len(len)) return false;
      }
      return true;
    }
  }
  for (std::size_t len = 1; fits(len); ++len) {
    if (!try_len(len)) return false;
  }
  return true;
}

bool FormulaSearch::branch_left(FragmentFrame& fr, std::size_t lo, std::size_t hi, std::size_t pos_lo,
                                std::size_t pos_hi) {
  const std::vector<int>& vars = *fr.vars;
  const std::size_t m = vars.size();
  const std::size_t n = text_.size();
  const int v = vars[lo - 1];
  SideNeeds need;
  for (std::size_t i = 0; i < m; ++i) {
    if (i + 1 >= lo && i < hi) continue;
    const Binding& b = bindings_[static_cast<std::size_t>(vars[i])];
    bool left = i + 1 < lo;
    if (vars[i] == v)
      ++(left ? need.left_v : need.right_v);
    else
      (left ? need.left_other : need.right_other) += b.bound() ? b.len : 1;
  }
  auto fits = [&](std::size_t len) {
    return len <= cap_ && len * (1 + need.left_v) + need.left_other <= pos_lo &&
           pos_hi + len * need.right_v + need.right_other <= n;
  };
  auto try_len = [&](std::size_t len) {
    bind(v, pos_lo - len, len, fr.depth);
    bool go = expand(fr, lo - 1, hi, pos_lo - len, pos_hi);
    bindings_[static_cast<std::size_t>(v)].level = -1;
    return go;
  };

  if (lo >= 2 && vars[lo - 2] != v) {
    const Binding& prev = bindings_[static_cast<std::size_t>(vars[lo - 2])];
    if (prev.bound() && prev.level < fr.depth) {
      const std::size_t ulen = prev.len;
      const std::vector<std::size_t>& occ = occurrences_of(vars[lo - 2]);
      // Occurrence q of the bound neighbour ends at q + ulen = pos_lo - len.
      for (auto it = occ.rbegin(); it != occ.rend(); ++it) {
        if (*it + ulen >= pos_lo) continue;
        const std::size_t len = pos_lo - (*it + ulen);
        if (!fits(len)) break;
        if (!try_len(len)) return false;
      }
      return true;
    }
  }
  for (std::size_t len = 1; fits(len); ++len) {
    if (!try_len(len)) return false;
  }
  return true;
}

}  // namespace morphic::detail
