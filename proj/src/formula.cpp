#include "morphic/formula.hpp"

#include <algorithm>
#include <array>

#include "matcher.hpp"

namespace morphic {

Formula::Formula(std::vector<std::vector<int>> fragments) {
  if (fragments.empty()) throw SyntaxError("formula: no fragments");
  std::array<int, 26> rename;
  rename.fill(-1);
  for (auto& frag : fragments) {
    if (frag.empty()) throw SyntaxError("formula: empty fragment");
    for (int& v : frag) {
      if (v < 0 || v >= 26) throw SyntaxError("formula: variable out of range");
      if (rename[static_cast<std::size_t>(v)] < 0) rename[static_cast<std::size_t>(v)] = variable_count_++;
      v = rename[static_cast<std::size_t>(v)];
    }
  }
  fragments_ = std::move(fragments);
}

Formula Formula::parse(std::string_view text) {
  if (text.empty()) throw SyntaxError("formula: empty input");
  std::vector<std::vector<int>> frags(1);
  for (char ch : text) {
    if (ch == '.') {
      if (frags.back().empty()) throw SyntaxError("formula '" + std::string(text) + "': empty fragment");
      frags.emplace_back();
    } else if (ch >= 'A' && ch <= 'Z') {
      frags.back().push_back(ch - 'A');
    } else {
      throw SyntaxError("formula '" + std::string(text) + "': unexpected character '" + std::string(1, ch) + "'");
    }
  }
  if (frags.back().empty()) throw SyntaxError("formula '" + std::string(text) + "': empty fragment");
  return Formula(std::move(frags));
}

std::size_t Formula::longest_fragment() const {
  std::size_t best = 0;
  for (const auto& f : fragments_) best = std::max(best, f.size());
  return best;
}

std::string Formula::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < fragments_.size(); ++i) {
    if (i) out.push_back('.');
    for (int v : fragments_[i]) out.push_back(static_cast<char>('A' + v));
  }
  return out;
}

std::string Assignment::to_string() const {
  std::string out;
  for (std::size_t v = 0; v < images.size(); ++v) {
    if (v) out += ", ";
    out.push_back(static_cast<char>('A' + v));
    out.push_back('=');
    out += images[v].str();
  }
  return out;
}

std::vector<Word> fragment_images(const Formula& f, const Assignment& a) {
  std::vector<Word> out;
  for (const auto& frag : f.fragments()) {
    Word w;
    for (int v : frag) w += a.images.at(static_cast<std::size_t>(v));
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

Assignment to_assignment(const detail::HashedText& text, const std::vector<detail::Binding>& bindings) {
  Assignment a;
  for (const auto& b : bindings) a.images.push_back(Word::from_digits(std::string(text.text().substr(b.pos, b.len))));
  return a;
}

}  // namespace

std::set<Assignment> find_occurrences(const Word& w, const Formula& f, std::size_t cap, std::uint64_t step_budget) {
  if (cap == 0) throw DomainError("find_occurrences: cap must be at least 1");
  detail::HashedText text(w.digits());
  detail::FormulaSearch search(text, f, cap, step_budget);
  std::set<Assignment> out;
  try {
    search.enumerate([&](const std::vector<detail::Binding>& b) {
      out.insert(to_assignment(text, b));
      return true;
    });
  } catch (const ResourceError& e) {
    throw OccurrenceBudgetExceeded(e.what(), std::move(out));
  }
  return out;
}

bool avoids(const Word& w, const Formula& f, std::uint64_t step_budget) {
  if (w.empty()) return true;
  detail::HashedText text(w.digits());
  detail::FormulaSearch search(text, f, w.size(), step_budget);
  return search.enumerate([](const std::vector<detail::Binding>&) { return false; });
}

bool is_doubled(const Formula& f) {
  std::vector<int> count(static_cast<std::size_t>(f.variable_count()), 0);
  for (const auto& frag : f.fragments())
    for (int v : frag) ++count[static_cast<std::size_t>(v)];
  return std::none_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

}  // namespace morphic
