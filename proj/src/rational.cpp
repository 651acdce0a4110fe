#include "morphic/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "morphic/error.hpp"

namespace morphic {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) throw DomainError("rational: numerator and denominator must be positive");
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::int64_t parse_positive(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v <= 0)
    throw SyntaxError("rational: bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_positive(text), 1);
  return Rational(parse_positive(text.substr(0, slash)), parse_positive(text.substr(slash + 1)));
}

std::string Rational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.num() << '/' << r.den(); }

}  // namespace morphic
