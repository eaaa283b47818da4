#include "orbitforce/realization.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <utility>

namespace orbitforce {

CanonicalOrbit canonical_orbit(const Word& w) {
  CanonicalOrbit orbit;
  orbit.word = w;
  orbit.points.reserve(w.size() + 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational magnitude(1, static_cast<unsigned>(i + 1));
    orbit.points.push_back(w.at(i) == Letter::L ? magnitude : -magnitude);
  }
  orbit.points.emplace_back(0);
  return orbit;
}

PLMap::PLMap(std::vector<Breakpoint> breakpoints) : pts_(std::move(breakpoints)) {
  if (pts_.empty()) {
    throw std::invalid_argument("PLMap: needs at least one breakpoint");
  }
  for (std::size_t j = 0; j + 1 < pts_.size(); ++j) {
    if (!(pts_[j].x < pts_[j + 1].x)) {
      throw std::invalid_argument("PLMap: breakpoints must strictly increase");
    }
  }
  // Piecewise-linear extremes sit at breakpoints, so checking the values
  // there checks the whole image.
  for (const Breakpoint& bp : pts_) {
    if (bp.y < domain_min() || bp.y > domain_max()) {
      throw std::invalid_argument("PLMap: image leaves the domain");
    }
  }
}

PLMap interpolate(const CanonicalOrbit& orbit) {
  if (orbit.points.empty()) {
    throw std::invalid_argument("interpolate: orbit has no points");
  }
  std::vector<Breakpoint> pts;
  pts.reserve(orbit.points.size());
  for (std::size_t i = 0; i + 1 < orbit.points.size(); ++i) {
    pts.push_back({orbit.points[i], orbit.points[i + 1]});
  }
  pts.push_back({orbit.points.back(), orbit.points.back()});
  std::sort(pts.begin(), pts.end(),
            [](const Breakpoint& a, const Breakpoint& b) { return a.x < b.x; });
  for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
    if (pts[j].x == pts[j + 1].x) {
      throw DegenerateOrbit("interpolate: orbit points coincide at " +
                            rational_to_string(pts[j].x));
    }
  }
  return PLMap(std::move(pts));
}

Rational eval(const PLMap& map, const Rational& x) {
  if (x < map.domain_min() || x > map.domain_max()) {
    throw OutOfDomain("eval: " + rational_to_string(x) + " outside [" +
                      rational_to_string(map.domain_min()) + ", " +
                      rational_to_string(map.domain_max()) + "]");
  }
  const auto& pts = map.breakpoints();
  auto it = std::lower_bound(
      pts.begin(), pts.end(), x,
      [](const Breakpoint& bp, const Rational& v) { return bp.x < v; });
  assert(it != pts.end());
  if (it->x == x) return it->y;
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

Word tag_of_point(const PLMap& map, const Rational& x, std::size_t max_steps) {
  std::string letters;
  Rational y = x;
  for (;;) {
    Rational z = eval(map, y);
    if (z == y) break;
    if (letters.size() >= max_steps) {
      throw NotEventuallyFixed("tag_of_point: " + rational_to_string(x) +
                               " not fixed after " +
                               std::to_string(max_steps) + " steps");
    }
    letters.push_back(z < y ? 'L' : 'R');
    y = std::move(z);
  }
  return parse_word(letters);
}

bool verify_collapse(const PLMap& map, std::size_t n) {
  Rational lo = map.domain_min();
  Rational hi = map.domain_max();
  for (std::size_t step = 0; step < n; ++step) {
    const auto& pts = map.breakpoints();
    bool first = true;
    Rational ilo, ihi;
    auto absorb = [&](Rational v) {
      if (first) {
        ilo = v;
        ihi = std::move(v);
        first = false;
      } else if (v < ilo) {
        ilo = std::move(v);
      } else if (v > ihi) {
        ihi = std::move(v);
      }
    };
    if (pts.size() == 1) {
      absorb(pts.front().y);
    }
    // The image of a connected interval is the hull of the per-piece
    // endpoint values: each piece is affine on its overlap.
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
      Rational a = std::max(lo, pts[j].x);
      Rational b = std::min(hi, pts[j + 1].x);
      if (a > b) continue;
      absorb(eval(map, a));
      absorb(eval(map, b));
    }
    lo = std::move(ilo);
    hi = std::move(ihi);
  }
  return lo == 0 && hi == 0;
}

namespace {

struct Affine {
  Rational slope;
  Rational intercept;

  Rational operator()(const Rational& x) const { return slope * x + intercept; }
};

Affine compose(const Affine& outer, const Affine& inner) {
  return {outer.slope * inner.slope,
          outer.slope * inner.intercept + outer.intercept};
}

Affine piece_affine(const PLMap& map, std::size_t j) {
  const auto& pts = map.breakpoints();
  Rational slope = (pts[j + 1].y - pts[j].y) / (pts[j + 1].x - pts[j].x);
  Rational intercept = pts[j].y - slope * pts[j].x;
  return {std::move(slope), std::move(intercept)};
}

/// Index of a piece whose closed x-range contains v (adjacent pieces agree
/// on shared breakpoints, so any containing piece works).
std::size_t piece_index_for(const PLMap& map, const Rational& v) {
  const auto& pts = map.breakpoints();
  assert(pts.size() >= 2);
  assert(v >= map.domain_min() && v <= map.domain_max());
  std::size_t lo = 0, hi = pts.size() - 2;
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (pts[mid].x <= v) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

TagEnumeration enumerate_tags(const PLMap& map, std::size_t depth) {
  const auto& pts = map.breakpoints();

  std::set<Rational> partition;
  std::vector<Rational> frontier;
  for (const Breakpoint& bp : pts) {
    partition.insert(bp.x);
    frontier.push_back(bp.x);
  }

  // Pull breakpoints back through the strictly monotone pieces, level by
  // level. Constant pieces add nothing: their preimage of a matching value
  // is the whole piece, whose endpoints are already breakpoints.
  for (std::size_t level = 1; level <= depth && !frontier.empty(); ++level) {
    std::vector<Rational> next;
    for (const Rational& target : frontier) {
      for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
        const Rational& y0 = pts[j].y;
        const Rational& y1 = pts[j + 1].y;
        if (y0 == y1) continue;
        if (target < std::min(y0, y1) || target > std::max(y0, y1)) continue;
        Rational x =
            pts[j].x + (target - y0) * (pts[j + 1].x - pts[j].x) / (y1 - y0);
        if (partition.insert(x).second) next.push_back(x);
      }
    }
    frontier = std::move(next);
  }

  // Within each cell every iterate up to `depth` is a single affine map, so
  // "step k+1 equals step k" is an affine equation; its root (when interior)
  // is the one place the tag can still change inside the cell.
  std::vector<Rational> cells(partition.begin(), partition.end());
  std::vector<Rational> roots;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    const Rational& a = cells[i];
    const Rational& b = cells[i + 1];
    const Rational mid = (a + b) / 2;
    Affine iterate{1, 0};
    for (std::size_t k = 0; k < depth; ++k) {
      const Affine next =
          compose(piece_affine(map, piece_index_for(map, iterate(mid))),
                  iterate);
      const Rational dslope = next.slope - iterate.slope;
      const Rational dintercept = next.intercept - iterate.intercept;
      if (dslope == 0 && dintercept == 0) break;  // cell fixed from step k on
      if (dslope != 0) {
        Rational root = -dintercept / dslope;
        if (a < root && root < b) roots.push_back(std::move(root));
      }
      iterate = next;
    }
  }
  partition.insert(roots.begin(), roots.end());

  TagEnumeration out;
  out.depth_bound = depth;
  out.partition_points.assign(partition.begin(), partition.end());
  for (const Rational& p : out.partition_points) {
    out.tags.insert(tag_of_point(map, p, depth));
  }
  for (std::size_t i = 0; i + 1 < out.partition_points.size(); ++i) {
    Rational mid = (out.partition_points[i] + out.partition_points[i + 1]) / 2;
    out.tags.insert(tag_of_point(map, mid, depth));
  }
  return out;
}

PatternSet forced_set_via_realization(const Word& w) {
  PLMap map = interpolate(canonical_orbit(w));
  if (!verify_collapse(map, w.size())) {
    throw NotEventuallyFixed("canonical map of " + format_word(w) +
                             " does not collapse within " +
                             std::to_string(w.size()) + " steps");
  }
  return enumerate_tags(map, w.size()).tags;
}

std::vector<TagBand> tag_bands(const PLMap& map, const TagEnumeration& e) {
  const auto& points = e.partition_points;
  std::vector<TagBand> out;
  auto add_region = [&](const Rational& lo, const Rational& hi, bool lo_closed,
                        bool hi_closed, Word tag) {
    if (!out.empty() && out.back().tag == tag) {
      out.back().hi = hi;
      out.back().hi_closed = hi_closed;
    } else {
      out.push_back({lo, hi, lo_closed, hi_closed, std::move(tag)});
    }
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    add_region(points[i], points[i], true, true,
               tag_of_point(map, points[i], e.depth_bound));
    if (i + 1 < points.size()) {
      Rational mid = (points[i] + points[i + 1]) / 2;
      add_region(points[i], points[i + 1], false, false,
                 tag_of_point(map, mid, e.depth_bound));
    }
  }
  return out;
}

std::string export_plmap_json(const PLMap& map) {
  nlohmann::ordered_json j;
  j["domain"] = {rational_to_string(map.domain_min()),
                 rational_to_string(map.domain_max())};
  auto arr = nlohmann::ordered_json::array();
  for (const Breakpoint& bp : map.breakpoints()) {
    arr.push_back({rational_to_string(bp.x), rational_to_string(bp.y)});
  }
  j["breakpoints"] = std::move(arr);
  return j.dump();
}

}  // namespace orbitforce
