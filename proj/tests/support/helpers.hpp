#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>

#include <orbitforce/word.hpp>

namespace orbitforce::testing {

inline Word W(std::string_view text) { return parse_word(text); }

inline PatternSet set_of(std::initializer_list<std::string_view> words) {
  PatternSet out;
  for (std::string_view t : words) out.insert(parse_word(t));
  return out;
}

inline std::string show(const PatternSet& s) {
  std::ostringstream os;
  os << "{";
  bool sep = false;
  for (const Word& w : s) {
    if (sep) os << ", ";
    os << w;
    sep = true;
  }
  os << "}";
  return os.str();
}

}  // namespace orbitforce::testing
