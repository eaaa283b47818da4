#pragma once

#include <vector>

#include "orbitforce/rational.hpp"
#include "orbitforce/word.hpp"

namespace orbitforce {

struct DegenerateOrbit : std::runtime_error {
  explicit DegenerateOrbit(const std::string& what)
      : std::runtime_error(what) {}
};

struct OutOfDomain : std::runtime_error {
  explicit OutOfDomain(const std::string& what) : std::runtime_error(what) {}
};

struct NotEventuallyFixed : std::runtime_error {
  explicit NotEventuallyFixed(const std::string& what)
      : std::runtime_error(what) {}
};

/// An orbit x_1 .. x_{n+1} realizing a tag of length n: x_{n+1} = 0 and
/// x_i is +1/i when letter i is L, -1/i when it is R. The shrinking
/// magnitudes make every point move in its labelled direction, so the sign
/// and movement conventions hold for every word.
struct CanonicalOrbit {
  Word word;
  std::vector<Rational> points;  // x_1 .. x_{n+1}; the last entry is 0
};

CanonicalOrbit canonical_orbit(const Word& w);

struct Breakpoint {
  Rational x;
  Rational y;
};

/// A continuous piecewise-linear self-map of [domain_min, domain_max]:
/// breakpoints with strictly increasing x, linear interpolation between
/// them. The image is contained in the domain, so the map iterates.
class PLMap {
 public:
  /// Validates the breakpoint list (nonempty, strictly increasing x, every
  /// value inside the domain); throws std::invalid_argument otherwise.
  explicit PLMap(std::vector<Breakpoint> breakpoints);

  const std::vector<Breakpoint>& breakpoints() const noexcept { return pts_; }
  const Rational& domain_min() const noexcept { return pts_.front().x; }
  const Rational& domain_max() const noexcept { return pts_.back().x; }

 private:
  std::vector<Breakpoint> pts_;
};

/// The linear interpolant through (x_i, x_{i+1}) for every orbit point,
/// with the final point fixed. Throws DegenerateOrbit when two orbit points
/// coincide (impossible for canonical_orbit output; guards imported orbits).
PLMap interpolate(const CanonicalOrbit& orbit);

/// Exact value at x; throws OutOfDomain outside [domain_min, domain_max].
Rational eval(const PLMap& map, const Rational& x);

/// The tag of x: one letter per step, L when the point moves left, R when
/// it moves right, until a fixed point is reached. Throws NotEventuallyFixed
/// when that takes more than max_steps steps.
Word tag_of_point(const PLMap& map, const Rational& x, std::size_t max_steps);

/// True iff the n-th image of the whole domain is exactly {0}, computed by
/// exact interval propagation through the pieces.
bool verify_collapse(const PLMap& map, std::size_t n);

/// The tag partition of a map: every breakpoint, every pullback of a
/// breakpoint through up to depth_bound steps, and every in-cell solution of
/// "step k+1 equals step k". Tags are constant between consecutive
/// partition points.
struct TagEnumeration {
  PatternSet tags;
  std::vector<Rational> partition_points;  // sorted ascending
  std::size_t depth_bound = 0;
};

/// Every tag the map admits, provided every domain point is eventually
/// fixed within `depth` steps. Errors from tag_of_point propagate when the
/// map violates that.
TagEnumeration enumerate_tags(const PLMap& map, std::size_t depth);

/// The tag set of the canonical taut map of w: tags of
/// interpolate(canonical_orbit(w)) enumerated to depth |w|.
PatternSet forced_set_via_realization(const Word& w);

/// A maximal interval on which the tag is constant.
struct TagBand {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;
  Word tag;
};

/// The partition's regions merged into maximal constant-tag bands, left to
/// right; adjacent bands carry distinct tags.
std::vector<TagBand> tag_bands(const PLMap& map, const TagEnumeration& e);

/// {"domain": [m, M], "breakpoints": [[x, y], ...]} with rationals as
/// strings ("p/q", integers as "p").
std::string export_plmap_json(const PLMap& map);

}  // namespace orbitforce
