#include "doctest.h"
#include "helpers.hpp"
#include "morphic/catalog.hpp"
#include "morphic/constraints.hpp"
#include "morphic/error.hpp"
#include "morphic/search.hpp"
#include "naive.hpp"

using namespace morphic;

TEST_CASE("longest word search") {
  auto sqf2 = parse_constraints("alphabet 2\nforbid-formula AA\n");
  auto r = longest_word_search(sqf2, 100);
  CHECK(r.kind == SearchKind::exhausted);
  CHECK(r.max_length == 3);
  CHECK(r.witness == W("010"));

  auto sqf3 = parse_constraints("alphabet 3\nforbid-formula AA\n");
  auto t = longest_word_search(sqf3, 50);
  CHECK(t.kind == SearchKind::reached_budget);
  REQUIRE(t.witness.has_value());
  CHECK(t.witness->size() == 50);
  CHECK_FALSE(check(*t.witness, sqf3).has_value());

  SearchOptions tiny;
  tiny.node_budget = 100;
  try {
    longest_word_search(sqf3, 1000, tiny);
    FAIL("expected budget exhaustion");
  } catch (const SearchBudgetExceeded& e) {
    CHECK(e.best().max_length > 0);
    REQUIRE(e.best().witness.has_value());
    CHECK_FALSE(check(*e.best().witness, sqf3).has_value());
  }
}

TEST_CASE("exhaustion agrees with brute force and is order independent") {
  const char* sets[] = {
      "alphabet 2\nforbid-formula AA\n",
      "alphabet 2\nforbid-formula AA.ABAB.BB\nforbid-factor 11 1010\n",
      "alphabet 2\nexponent-cap 2 non-strict\nforbid-factor 000\n",
      "alphabet 3\ngraph P3STAR\nforbid-formula AA\n",
  };
  for (const char* text : sets) {
    CAPTURE(text);
    auto c = parse_constraints(text);
    auto r = longest_word_search(c, 1000);
    REQUIRE(r.kind == SearchKind::exhausted);
    auto [len, first] = oracle::longest_good(c.alphabet_size, [&](const std::string& w) { return naive_good(w, c); }, 1000);
    CHECK(r.max_length == len);
    CHECK(r.witness->str() == first);
    SearchOptions desc;
    desc.descending_letters = true;
    CHECK(longest_word_search(c, 1000, desc).max_length == r.max_length);
    SearchOptions par;
    par.workers = 3;
    auto p = longest_word_search(c, 1000, par);
    CHECK(p.max_length == r.max_length);
  }
}

TEST_CASE("extendable sets") {
  auto no11 = parse_constraints("alphabet 2\nforbid-factor 11\n");
  auto s = extendable_set(no11, 2, 2);
  CHECK(strs(s.words) == std::set<std::string>{"00", "01", "10"});
  REQUIRE(s.witnesses.size() == s.words.size());
  for (std::size_t i = 0; i < s.words.size(); ++i) {
    CHECK(s.witnesses[i].size() == 6);
    CHECK(s.witnesses[i].factor(2, 2) == s.words[i]);
    CHECK_FALSE(check(s.witnesses[i], no11).has_value());
  }
  auto empty = parse_constraints("alphabet 2\nforbid-factor 0 1\n");
  CHECK(extendable_set(empty, 1, 1).words.empty());

  auto g4 = load_constraints(manifest_path("constraints/g4.cons"));
  auto e = extendable_set(g4, 20, 20);
  auto target = morphic_prefix(resolve_morphism("g4"), resolve_morphism("b3"), 20000);
  CHECK(strs(e.words) == strs(factors(target, 20)));
  for (std::size_t i = 0; i < e.words.size(); ++i) {
    CHECK(e.witnesses[i].factor(20, 20) == e.words[i]);
    CHECK(naive_good(e.witnesses[i].str(), g4));
  }
  SearchOptions par;
  par.workers = 4;
  auto ep = extendable_set(g4, 20, 20, par);
  CHECK(ep.words == e.words);
  CHECK(ep.witnesses == e.witnesses);
}

TEST_CASE("counts") {
  auto sqf2 = parse_constraints("alphabet 2\nforbid-formula AA\n");
  CHECK(count_by_length(sqf2, 4) == std::vector<std::uint64_t>{2, 2, 2, 0});
  auto free2 = parse_constraints("alphabet 2\n");
  CHECK(count_by_length(free2, 3) == std::vector<std::uint64_t>{2, 4, 8});

  const char* sets[] = {
      "alphabet 3\nforbid-formula AA\nforbid-factor 010 212\n",
      "alphabet 2\nforbid-squares-min-period 3\n",
      "alphabet 2\nmax-occurrences ABBA 4\n",
      "alphabet 2\nallow-overlaps 000 111\nmax-distinct-squares 6\n",
  };
  for (const char* text : sets) {
    CAPTURE(text);
    auto c = parse_constraints(text);
    const std::size_t n = c.alphabet_size == 2 ? 12 : 10;
    auto brute = oracle::count_all(c.alphabet_size, n, [&](const std::string& w) { return naive_good(w, c); });
    CHECK(count_by_length(c, n) == brute);
    SearchOptions par;
    par.workers = 3;
    CHECK(count_by_length(c, n, par) == brute);
  }
}

TEST_CASE("walk-constrained search emits walks") {
  auto c = load_constraints(manifest_path("constraints/k5.cons"));
  auto r = longest_word_search(c, 300);
  REQUIRE(r.witness.has_value());
  CHECK(is_walk(*r.witness, *c.graph));
  auto s = extendable_set(c, 6, 6);
  for (const auto& w : s.witnesses) CHECK(is_walk(w, *c.graph));
}
