#include "orbitforce/word.hpp"

#include <algorithm>

namespace orbitforce {

Word::Word(std::initializer_list<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter x : letters) letters_.push_back(to_char(x));
}

Letter Word::at(std::size_t i) const {
  if (i >= letters_.size()) throw std::out_of_range("Word::at: index past end");
  return letters_[i] == 'L' ? Letter::L : Letter::R;
}

Word Word::suffix(std::size_t count) const {
  if (count > letters_.size()) {
    throw std::out_of_range("Word::suffix: count past end");
  }
  return Word(letters_.substr(count));
}

Word Word::prepended(Letter x) const {
  std::string s;
  s.reserve(letters_.size() + 1);
  s.push_back(to_char(x));
  s += letters_;
  return Word(std::move(s));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return shortlex_compare(a, b);
}

Word parse_word(std::string_view text) {
  if (text == "e" || text.empty()) return Word();
  std::string letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c != 'L' && c != 'R') {
      throw InvalidLetter("invalid letter '" + std::string(1, c) + "' in \"" +
                          std::string(text) + "\" (expected L, R, or \"e\")");
    }
    letters.push_back(c);
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  return std::string(w.raw());
}

std::vector<Word> tails(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size() + 1);
  for (std::size_t k = 0; k <= w.size(); ++k) out.push_back(w.suffix(k));
  return out;
}

Word dual(const Word& w) {
  std::string s(w.raw());
  for (char& c : s) c = (c == 'L') ? 'R' : 'L';
  return parse_word(s);
}

std::strong_ordering shortlex_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  // L < R coincides with the character order 'L' < 'R'.
  return a.raw().compare(b.raw()) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << format_word(w);
}

PatternSet dual_image(const PatternSet& s) {
  PatternSet out;
  for (const Word& w : s) out.insert(dual(w));
  return out;
}

std::vector<Word> words_up_to_length(std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_len; ++n) {
    // Lexicographic within one length: run the letters like a binary counter
    // with L = 0, R = 1, most significant letter first.
    std::string s(n, 'L');
    while (true) {
      out.push_back(parse_word(s));
      std::size_t i = n;
      while (i > 0 && s[i - 1] == 'R') s[--i] = 'L';
      if (i == 0) break;
      s[i - 1] = 'R';
    }
  }
  return out;
}

}  // namespace orbitforce
