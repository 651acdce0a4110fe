#include "morphic/word.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "morphic/error.hpp"

namespace morphic {

Word Word::parse(std::string_view digits, int alphabet_size) {
  std::string out;
  out.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '9')
      throw SyntaxError("word: non-digit character '" + std::string(1, ch) + "'");
    if (ch - '0' >= alphabet_size)
      throw AlphabetError("word: letter " + std::string(1, ch) + " outside alphabet of size " +
                          std::to_string(alphabet_size));
    out.push_back(ch);
  }
  return Word(std::move(out));
}

int Word::max_letter() const {
  int best = -1;
  for (char ch : digits_) best = std::max(best, ch - '0');
  return best;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.digits(); }

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > static_cast<std::size_t>(kMaxAlphabet))
    throw AlphabetError("morphism: need 1 to 10 images, got " + std::to_string(images_.size()));
}

Morphism Morphism::parse(std::string_view text) {
  if (text.empty()) throw AlphabetError("morphism: no images");
  std::vector<Word> images;
  std::size_t start = 0;
  while (true) {
    std::size_t slash = text.find('/', start);
    std::string_view seg = text.substr(start, slash == std::string_view::npos ? text.npos : slash - start);
    for (char ch : seg) {
      if (ch < '0' || ch > '9')
        throw SyntaxError("morphism: unexpected character '" + std::string(1, ch) + "'");
    }
    images.push_back(Word::parse(seg));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return Morphism(std::move(images));
}

Morphism Morphism::identity(int alphabet_size) {
  std::vector<Word> images;
  for (int a = 0; a < alphabet_size; ++a) {
    Word w;
    w.push_back(a);
    images.push_back(std::move(w));
  }
  return Morphism(std::move(images));
}

int Morphism::target_alphabet_size() const {
  int best = -1;
  for (const Word& w : images_) best = std::max(best, w.max_letter());
  return best + 1;
}

bool Morphism::prolongable() const { return images_[0].size() >= 2 && images_[0][0] == 0; }

std::string Morphism::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out.push_back('/');
    out += images_[i].str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Morphism& m) { return os << m.to_string(); }

namespace {

void append_image(std::string& out, const Morphism& m, std::string_view letters) {
  for (char ch : letters) {
    int a = ch - '0';
    if (a >= m.alphabet_size())
      throw DomainError("apply: letter " + std::string(1, ch) + " outside morphism alphabet of size " +
                        std::to_string(m.alphabet_size()));
    out += m.image(a).digits();
  }
}

// Letters reachable from 0 by iterating m.
LetterSet reachable_from_zero(const Morphism& m) {
  LetterSet seen;
  std::vector<int> todo{0};
  seen.set(0);
  while (!todo.empty()) {
    int a = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < m.image(a).size(); ++i) {
      int b = m.image(a)[i];
      if (b >= m.alphabet_size())
        throw DomainError("fixed point: image letter " + std::to_string(b) + " outside the source alphabet");
      if (!seen.test(static_cast<std::size_t>(b))) {
        seen.set(static_cast<std::size_t>(b));
        todo.push_back(b);
      }
    }
  }
  return seen;
}

void validate_prolongable(const Morphism& m) {
  if (!m.prolongable()) throw DomainError("morphism " + m.to_string() + " is not prolongable on 0");
  LetterSet reach = reachable_from_zero(m);
  for (int a = 0; a < m.alphabet_size(); ++a) {
    if (reach.test(static_cast<std::size_t>(a)) && m.image(a).empty())
      throw DomainError("morphism " + m.to_string() + " erases reachable letter " + std::to_string(a));
  }
}

}  // namespace

Word apply(const Morphism& m, const Word& w) {
  std::string out;
  append_image(out, m, w.digits());
  return Word::from_digits(std::move(out));
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.target_alphabet_size() > outer.alphabet_size())
    throw DomainError("compose: inner images use letters outside the outer alphabet");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(inner.alphabet_size()));
  for (const Word& w : inner.images()) images.push_back(apply(outer, w));
  return Morphism(std::move(images));
}

Word fixed_point_prefix(const Morphism& m, std::size_t n, std::size_t max_length) {
  validate_prolongable(m);
  if (n > max_length)
    throw ResourceError("fixed point: requested " + std::to_string(n) + " letters exceeds the limit of " +
                        std::to_string(max_length));
  std::string cur = "0";
  while (cur.size() < n) {
    std::string next;
    next.reserve(std::min(n, cur.size() * 4 + 16));
    for (char ch : cur) {
      next += m.image(ch - '0').digits();
      if (next.size() >= n) break;
    }
    cur = std::move(next);
  }
  cur.resize(n);
  return Word::from_digits(std::move(cur));
}

Word morphic_prefix(const Morphism& outer, const Morphism& inner, std::size_t n, std::size_t max_length) {
  validate_prolongable(inner);
  if (inner.target_alphabet_size() > outer.alphabet_size())
    throw DomainError("morphic prefix: outer morphism does not cover the inner alphabet");
  if (n > max_length)
    throw ResourceError("morphic prefix: requested " + std::to_string(n) + " letters exceeds the limit of " +
                        std::to_string(max_length));
  LetterSet reach = reachable_from_zero(inner);
  bool grows = false;
  for (int a = 0; a < inner.alphabet_size(); ++a)
    grows = grows || (reach.test(static_cast<std::size_t>(a)) && !outer.image(a).empty());
  if (!grows && n > 0) throw DomainError("morphic prefix: outer morphism erases every reachable letter");

  std::size_t base = std::max<std::size_t>(n, 16);
  std::size_t last_len = 0;
  while (true) {
    Word src = fixed_point_prefix(inner, base, std::max(max_length, base));
    std::string out;
    out.reserve(n);
    for (char ch : src.digits()) {
      out += outer.image(ch - '0').digits();
      if (out.size() >= n) break;
    }
    if (out.size() >= n) {
      out.resize(n);
      return Word::from_digits(std::move(out));
    }
    if (base >= max_length || (last_len != 0 && out.size() == last_len))
      throw DomainError("morphic prefix: outer image stops growing before " + std::to_string(n) + " letters");
    last_len = out.size();
    base = std::min(max_length, base * 2);
  }
}

Morphism erase_letters(const Morphism& m, LetterSet kill) {
  std::vector<Word> images;
  for (const Word& w : m.images()) {
    std::string out;
    for (char ch : w.digits()) {
      if (!kill.test(static_cast<std::size_t>(ch - '0'))) out.push_back(ch);
    }
    images.push_back(Word::from_digits(std::move(out)));
  }
  return Morphism(std::move(images));
}

std::vector<Word> factors(const Word& w, std::size_t len) {
  if (len > w.size()) return {};
  std::unordered_set<std::string_view> seen;
  std::string_view d = w.digits();
  for (std::size_t i = 0; i + len <= d.size(); ++i) seen.insert(d.substr(i, len));
  std::vector<Word> out;
  out.reserve(seen.size());
  for (std::string_view s : seen) out.push_back(Word::from_digits(std::string(s)));
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_factor(const Word& w, const Word& u) { return w.digits().find(u.digits()) != std::string_view::npos; }

}  // namespace morphic
