// Acceptance run: one PASS/FAIL line per criterion.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "morphic/catalog.hpp"
#include "morphic/characterize.hpp"
#include "morphic/constraints.hpp"
#include "morphic/formula.hpp"
#include "morphic/graph.hpp"
#include "morphic/repetition.hpp"
#include "morphic/search.hpp"
#include "morphic/word.hpp"
#include "naive.hpp"
#include "oracles.hpp"

using namespace morphic;

namespace {

// Runtime budgets, seconds.
constexpr double kBudget1 = 120, kBudget2 = 1, kBudget3 = 60, kBudget4 = 600;
constexpr double kBudget5 = 600, kBudget6 = 600, kBudget7 = 900, kBudget8 = 300, kBudget9 = 300;
constexpr double kBudget10 = 1800, kBudget11 = 300;
// Growth: count[n+1]/count[n] must stay below this for n >= kGrowthFrom.
constexpr double kGrowthRatio = 1.1;
constexpr std::size_t kGrowthFrom = 30, kGrowthTo = 60;

const std::string kDir = MORPHIC_MANIFEST_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void run(int id, const char* title, double budget, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  o.require(secs < budget, "over the " + std::to_string(static_cast<int>(budget)) + "s budget");
  if (!o.ok) ++failures;
  std::printf("[%s] %d %s (%s, budget %gs)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, buf, budget,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::set<std::string> S(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

std::set<std::string> strs(const std::set<Word>& s) {
  std::set<std::string> out;
  for (const auto& w : s) out.insert(w.str());
  return out;
}

Word prefix_of(const char* outer, const char* inner, std::size_t n) {
  return morphic_prefix(resolve_morphism(outer), resolve_morphism(inner), n);
}

// Fast occurrence oracle for words over {0,1,2} of length <= 12 and formulas
// with at most two variables, one fragment of which holds every variable.
// That fragment is placed at every start with every pair of image lengths
// and read off the text; the other fragments are looked up in a stamped
// table of factor codes.
class SmallOccurrenceOracle {
 public:
  SmallOccurrenceOracle() {
    std::size_t total = 0;
    for (std::size_t l = 0; l <= 12; ++l) {
      offset_[l] = total;
      pow_[l] = l == 0 ? 1 : pow_[l - 1] * 3;
      total += pow_[l];
    }
    stamp_.assign(total, 0);
  }

  std::set<std::vector<std::string>> operator()(const std::string& w, const oracle::Frags& f) {
    ++id_;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t v = 0;
      for (std::size_t l = 1; i + l <= n; ++l) {
        v = v * 3 + static_cast<std::size_t>(w[i + l - 1] - '0');
        stamp_[offset_[l] + v] = id_;
      }
    }
    const int k = oracle::variable_count(f);
    std::size_t main = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      std::set<int> vs(f[j].begin(), f[j].end());
      if (static_cast<int>(vs.size()) == k) main = j;
    }
    const auto& frag = f[main];
    std::set<std::vector<std::string>> out;
    std::size_t len[2] = {0, 0};
    for (len[0] = 1; len[0] <= n; ++len[0])
      for (len[1] = k == 2 ? 1 : 0; len[1] <= (k == 2 ? n : 0); ++len[1]) {
        std::size_t total = 0;
        for (int x : frag) total += len[x];
        for (std::size_t i = 0; i + total <= n; ++i) {
          std::size_t at[2] = {SIZE_MAX, SIZE_MAX};
          std::size_t pos = i;
          bool ok = true;
          for (int x : frag) {
            if (at[x] == SIZE_MAX) at[x] = pos;
            else if (w.compare(pos, len[x], w, at[x], len[x]) != 0) ok = false;
            pos += len[x];
          }
          if (!ok) continue;
          for (std::size_t j = 0; ok && j < f.size(); ++j) {
            if (j == main) continue;
            std::size_t l = 0, v = 0;
            for (int x : f[j])
              for (std::size_t c = 0; c < len[x]; ++c) {
                v = v * 3 + static_cast<std::size_t>(w[at[x] + c] - '0');
                ++l;
              }
            ok = l <= n && stamp_[offset_[l] + v] == id_;
          }
          if (!ok) continue;
          std::vector<std::string> img;
          for (int x = 0; x < k; ++x) img.push_back(w.substr(at[x], len[x]));
          out.insert(std::move(img));
        }
      }
    return out;
  }

 private:
  std::size_t offset_[13]{}, pow_[13]{};
  std::vector<std::uint32_t> stamp_;
  std::uint32_t id_ = 0;
};

std::set<std::vector<std::string>> lib_occurrences(const std::string& w, const Formula& f, std::size_t cap) {
  std::set<std::vector<std::string>> out;
  for (const auto& a : find_occurrences(Word::from_digits(w), f, cap)) {
    std::vector<std::string> v;
    for (const auto& x : a.images) v.push_back(x.str());
    out.insert(std::move(v));
  }
  return out;
}

void criterion1(Outcome& o) {
  const char* formulas[] = {"AA", "ABA", "ABBA", "AA.ABAB.BB"};
  std::vector<Formula> fs;
  std::vector<oracle::Frags> frs;
  for (const char* t : formulas) {
    fs.push_back(Formula::parse(t));
    frs.push_back(oracle::parse_formula(t));
  }
  SmallOccurrenceOracle occ;
  std::size_t words = 0, mismatches = 0;
  auto compare = [&](const std::string& s, bool occurrences_exhaustive) {
    ++words;
    const Word w = Word::from_digits(s);
    bool bad = strs(distinct_squares(w)) != oracle::squares(s) || strs(distinct_min_overlaps(w)) != oracle::min_overlaps(s);
    if (s.size() >= 2) {
      auto [num, den] = oracle::max_exponent(s);
      bad |= max_exponent(w).exponent != Rational(num, den);
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (occurrences_exhaustive) {
        bad |= lib_occurrences(s, fs[i], std::max<std::size_t>(1, s.size())) != occ(s, frs[i]);
      } else {
        const std::size_t cap = 4;
        bad |= lib_occurrences(s, fs[i], cap) != oracle::occurrences(s, frs[i], cap);
      }
    }
    if (bad && ++mismatches <= 3) o.require(false, "mismatch on " + s);
  };
  for (std::size_t n = 0; n <= 12; ++n) oracle::for_each_word(2, n, [&](const std::string& s) { compare(s, true); });
  for (std::size_t n = 0; n <= 12; ++n)
    oracle::for_each_word(3, n, [&](const std::string& s) {
      // binary words were already covered
      if (s.find('2') != std::string::npos) compare(s, true);
    });
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) compare(oracle::random_word(rng, 2 + i % 2, 1 + rng() % 200), false);
  o.detail = std::to_string(words) + " words, " + std::to_string(mismatches) + " mismatches";
  o.ok = mismatches == 0;
}

void criterion2(Outcome& o) {
  o.require(morphisms_equal(compose(resolve_morphism("g12"), resolve_morphism("M2")), resolve_morphism("h12")),
            "g12 o M2 != h12");
  const auto b3 = resolve_morphism("012/02/1");
  o.require(morphisms_equal(compose(resolve_morphism("c5"), resolve_morphism("k5")), compose(b3, b3)),
            "c5 o k5 != b3^2");
}

void criterion3(Outcome& o) {
  const Word w = prefix_of("g4", "b3", 100000);
  o.require(strs(distinct_squares(w)) == S({"00", "11", "001001", "110110"}), "square inventory");
  o.require(!find_sq_t(w, 4).has_value(), "contains a square of period >= 4");
  for (const char* f : {"0000", "1111", "0101", "1010", "10010", "01101"})
    o.require(!contains_factor(w, Word::parse(f)), std::string("contains ") + f);
}

void criterion4(Outcome& o, std::size_t L) {
  const auto c = load_constraints(kDir + "/constraints/g4.cons");
  const Word w = prefix_of("g4", "b3", std::max<std::size_t>(100000, 10 * L));
  SearchOptions opts;
  opts.node_budget = std::uint64_t{1} << 40;
  const auto s = extendable_set(c, L, L, opts);
  const auto f = factors(w, L);
  o.require(s.words == f, "S^L differs from Fact_L");
  for (const auto& x : s.witnesses) o.require(!check(x, c).has_value(), "bad witness " + x.str());
  o.detail = "|S^" + std::to_string(L) + "| = " + std::to_string(s.words.size()) + ", |Fact| = " + std::to_string(f.size()) +
             ", nodes " + std::to_string(s.tree_nodes) + (o.detail.empty() ? "" : "; " + o.detail);
}

void criterion5(Outcome& o) {
  const Word w = prefix_of("g5", "b3", 100000);
  o.require(strs(distinct_squares(w)) == S({"00", "11", "0000", "0001100011", "1000010000"}), "square inventory");
  o.require(every_window_contains(w, 29, Word::parse("00000")), "window 29 without 00000");
  o.require(avoids(w.prefix(5000), Formula::parse("ABBBBBCABBBBBC")), "ABBBBBCABBBBBC occurs");
}

void criterion6(Outcome& o) {
  const Word w = prefix_of("h12", "b5", 100000);
  o.require(strs(distinct_squares(w)) == S({"00", "11", "0101", "1010", "010010", "01100110", "10011001", "100110100110",
                                             "011001011001", "101001101001", "100101100101",
                                             "10010110011010011001011001101001"}),
            "square inventory");
  o.require(strs(distinct_min_overlaps(w)) == S({"01010"}), "overlap inventory");
  o.require(every_window_contains(w, 57, Word::parse("0110010100110")), "window 57 without 0110010100110");
}

void criterion7(Outcome& o) {
  const Word w = prefix_of("c", "b5", 5000);
  const auto occ = find_occurrences(w, Formula::parse("ABBA"), 20);
  std::set<std::string> images;
  for (const auto& a : occ) images.insert(fragment_images(Formula::parse("ABBA"), a).front().str());
  o.require(occ.size() == 8, std::to_string(occ.size()) + " assignments");
  o.require(images == S({"0000", "0110", "1001", "1111", "001100", "011110", "100001", "110011"}), "images differ from X8");
  o.require(!find_sq_t(w, 3).has_value(), "square of period >= 3");
  const auto sq3f = load_constraints(kDir + "/constraints/sq3-f.cons");
  for (const auto& f : sq3f.forbidden_factors) o.require(!contains_factor(w, f), "contains " + f.str());
  o.require(sq3f.forbidden_factors.size() == 14, "F should have 14 words");
}

void criterion8(Outcome& o) {
  const auto b3 = resolve_morphism("b3");
  const Word k5 = morphic_prefix(resolve_morphism("k5"), b3, 10000);
  const Word k4 = morphic_prefix(resolve_morphism("k4"), b3, 10000);
  const Word k3 = morphic_prefix(resolve_morphism("k3"), b3, 10000);
  o.require(is_walk(k5, builtin_graph("P5")), "k5 walk");
  o.require(is_walk(k4, builtin_graph("P4")), "k4 walk");
  o.require(is_walk(k3, builtin_graph("P3STAR")), "k3 walk");
  o.require(distinct_squares(k5).empty(), "k5 prefix has a square");
  const Formula ababa = Formula::parse("ABABA");
  o.require(avoids(k4, ababa), "k4 prefix meets ABABA");
  o.require(avoids(k3, ababa), "k3 prefix meets ABABA");
  for (const char* a : {"000", "111", "222", "333"}) {
    o.require(!contains_factor(k4, Word::parse(a)), std::string("k4 contains ") + a);
    o.require(!contains_factor(k3, Word::parse(a)), std::string("k3 contains ") + a);
  }
  LetterSet three;
  three.set(3);
  o.require(erase_letters(resolve_morphism("k4"), three) == resolve_morphism("k3"), "erase(k4, {3}) != k3");
}

void criterion9(Outcome& o) {
  SearchOptions opts;
  opts.node_budget = std::uint64_t{1} << 36;
  const auto a = parse_constraints("alphabet 2\nforbid-formula AA\n");
  const auto ra = longest_word_search(a, 10000, opts);
  o.require(ra.kind == SearchKind::exhausted && ra.max_length == 3, "(a) not exhausted at 3");

  const auto b = parse_constraints("alphabet 2\nforbid-formula AA.ABAB.BB\nforbid-factor 11 1010\n");
  const auto rb = longest_word_search(b, 10000, opts);
  o.require(rb.kind == SearchKind::exhausted, "(b) not exhausted");
  // independent breadth-first recount with the naive predicate
  const auto [len, first] = oracle::longest_good(2, [&](const std::string& w) { return naive_good(w, b); }, 10000);
  o.require(rb.max_length == len && rb.witness && rb.witness->str() == first, "(b) disagrees with brute force");

  std::string c_lengths;
  for (const char* pair : {"10101-1001001", "10101-0110110", "1001001-0110110"}) {
    const auto c = load_constraints(kDir + "/constraints/eleven-squares-" + pair + ".cons");
    const auto rc = longest_word_search(c, 100000, opts);
    o.require(rc.kind == SearchKind::exhausted, std::string("(c) ") + pair + " not exhausted");
    c_lengths += (c_lengths.empty() ? "" : "/") + std::to_string(rc.max_length);
  }
  o.detail = "(a) max 3; (b) max " + std::to_string(rb.max_length) + " witness " + (rb.witness ? rb.witness->str() : "-") +
             "; (c) max " + c_lengths + (o.detail.empty() ? "" : "; " + o.detail);
}

void criterion10(Outcome& o) {
  VerifyOptions v;
  v.check_length = 20;
  v.horizon = 20;
  v.prefix = 10000;
  for (const char* name : {"fib", "b3", "p", "b5", "pd-currie", "pd-new"}) {
    const auto r = verify_characterization(load_manifest(kDir + "/" + name), v);
    o.require(r.passed() && r.only_in_language.empty() && r.only_in_target.empty(), std::string(name) + " failed");
  }
}

void criterion11(Outcome& o) {
  const auto b3 = load_constraints(kDir + "/constraints/b3.cons");
  const auto counts = count_by_length(b3, kGrowthTo + 1);
  double worst = 0;
  for (std::size_t n = kGrowthFrom; n <= kGrowthTo; ++n) {
    const double r = static_cast<double>(counts[n]) / static_cast<double>(counts[n - 1]);  // count[n+1]/count[n]
    worst = std::max(worst, r);
  }
  o.require(worst < kGrowthRatio, "ratio " + std::to_string(worst));
  const auto free2 = count_by_length(parse_constraints("alphabet 2\n"), 20);
  for (std::size_t n = 0; n < free2.size(); ++n) o.require(free2[n] == (std::uint64_t{1} << (n + 1)), "free count");
  char buf[96];
  std::snprintf(buf, sizeof buf, "max ratio %.4f for n in [%zu, %zu]", worst, kGrowthFrom, kGrowthTo);
  o.detail = buf + (o.detail.empty() ? "" : "; " + o.detail);
}

}  // namespace

int main(int argc, char** argv) {
  // optional: run a single criterion, e.g. "acceptance 7"
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  auto run = [&](int id, const char* title, double budget, const std::function<void(Outcome&)>& body) {
    if (only == 0 || only == id) ::run(id, title, budget, body);
  };
  run(1, "oracle equivalence (exhaustive <= 12 over 2 and 3 letters, 1000 random)", kBudget1, criterion1);
  run(2, "morphism identities", kBudget2, criterion2);
  run(3, "four squares inventory of g4(b3)", kBudget3, criterion3);
  run(4, "S^L equals Fact_L for g4(b3) at L=30 and L=100", kBudget4, [](Outcome& o) {
    criterion4(o, 30);
    const std::string reduced = o.detail;
    o.detail.clear();
    criterion4(o, 100);
    o.detail = reduced + "; " + o.detail;
  });
  run(5, "five squares and localizer for g5(b3)", kBudget5, criterion5);
  run(6, "twelve squares and localizer for h12(b5)", kBudget6, criterion6);
  run(7, "ABBA occurrences in c(b5)", kBudget7, criterion7);
  run(8, "walks k5, k4, k3 and their repetitions", kBudget8, criterion8);
  run(9, "emptiness refutations", kBudget9, criterion9);
  run(10, "characterization suite at L=20", kBudget10, criterion10);
  run(11, "growth sanity", kBudget11, criterion11);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
