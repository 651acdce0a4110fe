#pragma once

#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace morphic {

inline constexpr int kMaxAlphabet = 10;

/// A finite word over the digit alphabet {0,...,9}.
///
/// Letters are stored as their digit characters so the text form of a word
/// is also its storage; ordering is lexicographic on letters.
class Word {
 public:
  Word() = default;

  /// Parses a digit string. Throws SyntaxError on non-digits and
  /// AlphabetError on letters >= alphabet_size.
  static Word parse(std::string_view digits, int alphabet_size = kMaxAlphabet);

  /// Wraps a string already known to hold only digit characters.
  static Word from_digits(std::string digits) { return Word(std::move(digits)); }

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  int operator[](std::size_t i) const { return digits_[i] - '0'; }

  std::string_view digits() const { return digits_; }
  const std::string& str() const { return digits_; }

  Word factor(std::size_t pos, std::size_t len) const { return Word(digits_.substr(pos, len)); }
  Word prefix(std::size_t len) const { return factor(0, len); }

  void push_back(int letter) { digits_.push_back(static_cast<char>('0' + letter)); }
  void pop_back() { digits_.pop_back(); }
  Word& operator+=(const Word& other) {
    digits_ += other.digits_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  /// Largest letter present, or -1 for the empty word.
  int max_letter() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  explicit Word(std::string digits) : digits_(std::move(digits)) {}
  std::string digits_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

using LetterSet = std::bitset<kMaxAlphabet>;

/// A morphism letter -> word, written m(0)/m(1)/... ; empty images are allowed.
class Morphism {
 public:
  explicit Morphism(std::vector<Word> images);

  /// Parses the slash-separated format. An empty segment is an empty image.
  static Morphism parse(std::string_view text);
  static Morphism identity(int alphabet_size);

  int alphabet_size() const { return static_cast<int>(images_.size()); }
  const Word& image(int letter) const { return images_.at(static_cast<std::size_t>(letter)); }
  const std::vector<Word>& images() const { return images_; }

  /// One more than the largest letter used by any image (0 if all images are empty).
  int target_alphabet_size() const;

  /// image(0) starts with 0 and has length at least 2.
  bool prolongable() const;

  std::string to_string() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::vector<Word> images_;
};

std::ostream& operator<<(std::ostream& os, const Morphism& m);

/// Default cap on generated prefix lengths (letters).
inline constexpr std::size_t kDefaultMaxPrefix = std::size_t{1} << 28;

Word apply(const Morphism& m, const Word& w);

/// Result maps a to apply(outer, inner.image(a)).
Morphism compose(const Morphism& outer, const Morphism& inner);

/// Length-n prefix of the fixed point m^omega(0).
Word fixed_point_prefix(const Morphism& m, std::size_t n, std::size_t max_length = kDefaultMaxPrefix);

/// Length-n prefix of outer(inner^omega(0)).
Word morphic_prefix(const Morphism& outer, const Morphism& inner, std::size_t n,
                    std::size_t max_length = kDefaultMaxPrefix);

/// Deletes the letters of `kill` from every image; no relabeling.
Morphism erase_letters(const Morphism& m, LetterSet kill);

/// Distinct factors of length len, lexicographically ordered. Empty if len > |w|.
std::vector<Word> factors(const Word& w, std::size_t len);

bool contains_factor(const Word& w, const Word& u);

}  // namespace morphic

template <>
struct std::hash<morphic::Word> {
  std::size_t operator()(const morphic::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.digits());
  }
};
