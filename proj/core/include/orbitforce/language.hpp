#pragma once

#include <map>

#include "orbitforce/word.hpp"

namespace orbitforce {

struct InconsistentInput : std::runtime_error {
  explicit InconsistentInput(const std::string& what)
      : std::runtime_error(what) {}
};

/// Members of s that are nonempty and begin with `letter`.
PatternSet filter_by_first_letter(const PatternSet& s, Letter letter);

/// { letter . u : u in s }.
PatternSet prepend_letter(const PatternSet& s, Letter letter);

/// Memoized recursive construction of the language of each word. One table
/// may serve many queries; entries are immutable once computed.
class LanguageTable {
 public:
  /// The constructed language of w. Base case: for |w| <= 2 the language is
  /// exactly the tails of w. For longer words the recursion branches on the
  /// leading letters:
  ///
  ///   LRw'  ->  lang(Rw')  u  L(members of lang(Rw') starting with R)
  ///   LLLw' ->  lang(LLw') u  L(members of lang(LLw') starting with L)
  ///   LLRw' ->  lang(LRw') u  L(lang(LRw'))
  ///
  /// and the letter-swapped rules for words starting with R.
  const PatternSet& language(const Word& w);

  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<Word, PatternSet> entries_;
};

/// LanguageTable::language on a fresh table.
PatternSet construct_language(const Word& w);

/// The language of letter.w computed from the language of w by the one-letter
/// extension rules (for letter = L):
///
///   w starts LL:  lang_w u L(members of lang_w starting with L)
///   w starts LR:  lang_w u L(lang_w)
///   w starts R:   lang_w u L(members of lang_w starting with R)
///
/// letter-swapped for R; for |w| <= 1 the base case applies. This is a
/// second, incremental route to the same sets as LanguageTable::language.
/// Throws InconsistentInput when lang_w is not a plausible language of w.
PatternSet extend_language(Letter letter, const Word& w,
                           const PatternSet& lang_w);

}  // namespace orbitforce
