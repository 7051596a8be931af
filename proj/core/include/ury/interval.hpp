#pragma once

#include <string>

#include "ury/dyadic.hpp"

namespace ury {

/// Closed dyadic interval [lo, hi], lo <= hi.
struct DyadicInterval {
  Dyadic lo, hi;

  bool contains(const Dyadic& x) const { return lo <= x && x <= hi; }
  Dyadic width() const { return dis(hi, lo); }
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

  friend bool operator==(const DyadicInterval& a, const DyadicInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

inline bool overlaps(const DyadicInterval& a, const DyadicInterval& b) {
  return a.lo <= b.hi && b.lo <= a.hi;
}

/// Intersection; callers must know the intervals overlap.
DyadicInterval intersect(const DyadicInterval& a, const DyadicInterval& b);

/// Pointwise enclosures of arithmetic on nonnegative reals.
DyadicInterval add_intervals(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval dis_intervals(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval sup_intervals(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval scale_interval(const Dyadic& k, const DyadicInterval& a);

}  // namespace ury
