#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "morphic/error.hpp"
#include "morphic/rational.hpp"
#include "morphic/repetition.hpp"
#include "oracles.hpp"

using namespace morphic;

TEST_CASE("rational") {
  CHECK(Rational(4, 2) == Rational(2, 1));
  CHECK(Rational(6, 4).num() == 3);
  CHECK(Rational(7, 4) > Rational(5, 3));
  CHECK(Rational::parse("10/6") == Rational(5, 3));
  CHECK(Rational::parse("2") == Rational(2, 1));
  CHECK(Rational(5, 3).to_string() == "5/3");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("squares and overlaps") {
  CHECK(strs(distinct_squares(W("0100010101"))) == std::set<std::string>{"00", "0101", "1010"});
  CHECK(distinct_squares(W("010")).empty());
  CHECK(strs(distinct_min_overlaps(W("0100010101"))) == std::set<std::string>{"000", "01010", "10101"});
  CHECK(distinct_min_overlaps(W("0110")).empty());
  // 00 and 0000 count separately
  CHECK(distinct_squares(W("0000")).size() == 2);
}

TEST_CASE("find_sq_t") {
  auto r = find_sq_t(W("012012"), 3);
  REQUIRE(r.has_value());
  CHECK(r->start == 0);
  CHECK(r->period == 3);
  CHECK_FALSE(find_sq_t(W("0100010101"), 3).has_value());
}

TEST_CASE("max exponent") {
  auto e = max_exponent(W("010"));
  CHECK(e.exponent == Rational(3, 2));
  CHECK(e.witness.period == 2);
  CHECK(e.witness.start == 0);
  CHECK(max_exponent(W("00")).exponent == Rational(2, 1));
  CHECK(max_exponent(W("01010")).exponent == Rational(5, 2));
  CHECK_THROWS_AS(max_exponent(W("0")), DomainError);

  CHECK_FALSE(find_exponent_violation(W("010"), Rational(7, 4), true).has_value());
  auto v = find_exponent_violation(W("0101"), Rational(2, 1), false);
  REQUIRE(v.has_value());
  CHECK(v->length == 4);
  CHECK(v->period == 2);
  CHECK_FALSE(find_exponent_violation(W("0101"), Rational(2, 1), true).has_value());
  // scaling e changes nothing
  CHECK(find_exponent_violation(W("0101"), Rational(4, 2), false).has_value());
}

namespace {
void agree(const std::string& s) {
  Word w = W(s);
  const auto sq = oracle::squares(s);
  CHECK(strs(distinct_squares(w)) == sq);
  const auto ov = oracle::min_overlaps(s);
  CHECK(strs(distinct_min_overlaps(w)) == ov);
  for (std::size_t t = 1; t <= 4; ++t) {
    bool brute = false;
    for (const auto& x : sq) brute |= x.size() / 2 >= t;
    auto r = find_sq_t(w, t);
    CHECK(r.has_value() == brute);
    if (r) {
      CHECK(r->period >= t);
      CHECK(r->length == 2 * r->period);
      CHECK(oracle::has_period(s, r->start, r->length, r->period));
    }
  }
  if (s.size() >= 2) {
    auto e = max_exponent(w);
    auto [num, den] = oracle::max_exponent(s);
    CHECK(e.exponent == Rational(num, den));
    CHECK(e.witness.exponent() == e.exponent);
    CHECK(oracle::has_period(s, e.witness.start, e.witness.length, e.witness.period));
    CHECK((e.exponent >= Rational(2, 1)) == !sq.empty());
    CHECK((e.exponent > Rational(2, 1)) == !ov.empty());
    for (auto cap : {Rational(3, 2), Rational(2, 1), Rational(7, 3)}) {
      CHECK(find_exponent_violation(w, cap, true).has_value() == (e.exponent > cap));
      CHECK(find_exponent_violation(w, cap, false).has_value() == (e.exponent >= cap));
    }
  }
}
}  // namespace

TEST_CASE("repetition oracles, exhaustive short words") {
  for (std::size_t n = 0; n <= 12; ++n) oracle::for_each_word(2, n, agree);
  for (std::size_t n = 0; n <= 8; ++n) oracle::for_each_word(3, n, agree);
}

TEST_CASE("repetition oracles, random words") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int a = 2 + i % 2;
    const std::size_t len = 1 + rng() % 200;
    agree(oracle::random_word(rng, a, len));
  }
  // highly repetitive inputs
  for (int i = 0; i < 100; ++i) {
    std::string u = oracle::random_word(rng, 2, 1 + rng() % 5);
    std::string s;
    while (s.size() < 40 + static_cast<std::size_t>(i)) s += u;
    s += oracle::random_word(rng, 2, rng() % 4);
    agree(s);
  }
}
