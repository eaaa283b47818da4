#include "orbitforce/language.hpp"

#include <algorithm>

namespace orbitforce {

PatternSet filter_by_first_letter(const PatternSet& s, Letter letter) {
  PatternSet out;
  for (const Word& w : s) {
    if (!w.empty() && w.front() == letter) out.insert(w);
  }
  return out;
}

PatternSet prepend_letter(const PatternSet& s, Letter letter) {
  PatternSet out;
  for (const Word& w : s) out.insert(w.prepended(letter));
  return out;
}

namespace {

PatternSet tail_set(const Word& w) {
  PatternSet out;
  for (const Word& t : tails(w)) out.insert(t);
  return out;
}

void merge_into(PatternSet& dst, const PatternSet& src) {
  dst.insert(src.begin(), src.end());
}

}  // namespace

const PatternSet& LanguageTable::language(const Word& w) {
  if (auto it = entries_.find(w); it != entries_.end()) return it->second;

  PatternSet result;
  if (w.size() <= 2) {
    result = tail_set(w);
  } else {
    const Word rest = w.suffix(1);  // |rest| >= 2
    const PatternSet& lang_rest = language(rest);
    const Letter first = w.at(0);
    const Letter second = w.at(1);
    result = lang_rest;
    if (second == dual(first)) {
      // LRw' (resp. RLw'): prepend to the members starting with the dual.
      merge_into(result,
                 prepend_letter(filter_by_first_letter(lang_rest, second),
                                first));
    } else if (w.at(2) == first) {
      // LLLw' (resp. RRRw'): prepend to the members starting with `first`.
      merge_into(result,
                 prepend_letter(filter_by_first_letter(lang_rest, first),
                                first));
    } else {
      // LLRw' (resp. RRLw'): prepend to everything.
      merge_into(result, prepend_letter(lang_rest, first));
    }
  }
  return entries_.emplace(w, std::move(result)).first->second;
}

PatternSet construct_language(const Word& w) {
  LanguageTable table;
  return table.language(w);
}

namespace {

void check_language_invariants(const Word& w, const PatternSet& lang_w) {
  if (!lang_w.contains(w) || !lang_w.contains(Word())) {
    throw InconsistentInput("extend_language: language of " + format_word(w) +
                            " must contain the word itself and e");
  }
  if (w.size() <= 2 && lang_w != tail_set(w)) {
    throw InconsistentInput("extend_language: language of " + format_word(w) +
                            " must be exactly its tails");
  }
}

}  // namespace

PatternSet extend_language(Letter letter, const Word& w,
                           const PatternSet& lang_w) {
  check_language_invariants(w, lang_w);
  if (w.size() <= 1) return tail_set(w.prepended(letter));

  PatternSet result = lang_w;
  const Letter first = w.at(0);
  if (first != letter) {
    // w starts with the dual letter: prepend to members starting with it.
    merge_into(result,
               prepend_letter(filter_by_first_letter(lang_w, first), letter));
  } else if (w.at(1) == letter) {
    // w starts letter,letter: prepend to members starting with `letter`.
    merge_into(result,
               prepend_letter(filter_by_first_letter(lang_w, letter), letter));
  } else {
    // w starts letter,dual: prepend to everything.
    merge_into(result, prepend_letter(lang_w, letter));
  }
  return result;
}

}  // namespace orbitforce
