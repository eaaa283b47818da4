#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbitforce {

struct InvalidLetter : std::runtime_error {
  explicit InvalidLetter(const std::string& what) : std::runtime_error(what) {}
};

/// The two-letter alphabet. A trajectory point is labelled L when it moves
/// left towards the fixed point, R when it moves right.
enum class Letter : unsigned char { L, R };

constexpr Letter dual(Letter x) noexcept {
  return x == Letter::L ? Letter::R : Letter::L;
}

constexpr char to_char(Letter x) noexcept {
  return x == Letter::L ? 'L' : 'R';
}

/// A finite word over {L, R}; the tag of an eventually-fixed orbit pattern.
/// The empty word is valid and prints as "e". Comparison is shortlex:
/// shorter words first, equal lengths lexicographic with L < R.
class Word {
 public:
  Word() = default;
  explicit Word(std::initializer_list<Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Letter at(std::size_t i) const;
  Letter front() const { return at(0); }

  /// The letters as a plain 'L'/'R' character sequence (empty for the
  /// empty word; no "e" token here).
  std::string_view raw() const noexcept { return letters_; }

  /// Drops the first `count` letters.
  Word suffix(std::size_t count) const;

  Word prepended(Letter x) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}

  std::string letters_;  // 'L'/'R' only

  friend Word parse_word(std::string_view text);
};

/// Parses "L"/"R" strings; the token "e" (or the empty string) is the empty
/// word. Throws InvalidLetter on anything else.
Word parse_word(std::string_view text);

/// Inverse of parse_word; the empty word formats as "e".
std::string format_word(const Word& w);

/// All suffixes of w, from w itself down to the empty word (|w|+1 entries).
std::vector<Word> tails(const Word& w);

/// Letterwise L/R swap; an involution.
Word dual(const Word& w);

std::strong_ordering shortlex_compare(const Word& a, const Word& b);

std::ostream& operator<<(std::ostream& os, const Word& w);

/// A set of words; iteration order is shortlex because that is Word's
/// ordering.
using PatternSet = std::set<Word>;

/// { dual(u) : u in s }.
PatternSet dual_image(const PatternSet& s);

/// All 2^(max_len+1) - 1 words of length <= max_len, in shortlex order.
std::vector<Word> words_up_to_length(std::size_t max_len);

}  // namespace orbitforce
