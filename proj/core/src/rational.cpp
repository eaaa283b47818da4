#include "orbitforce/rational.hpp"

namespace orbitforce {

std::string rational_to_string(const Rational& r) { return r.str(); }

Rational parse_rational(std::string_view text) {
  return Rational(std::string(text));
}

}  // namespace orbitforce
