#include "ury/approx.hpp"

#include "ury/errors.hpp"

namespace ury {

DyadicInterval intersect(const DyadicInterval& a, const DyadicInterval& b) {
  if (!overlaps(a, b))
    throw Error("invalid-refinement", "refinement intervals " + a.str() + " and " +
                                          b.str() + " are disjoint");
  return {sup(a.lo, b.lo), inf(a.hi, b.hi)};
}

DyadicInterval add_intervals(const DyadicInterval& a, const DyadicInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

DyadicInterval dis_intervals(const DyadicInterval& a, const DyadicInterval& b) {
  // |x - y| over x in a, y in b: zero is attainable iff the intervals
  // overlap; otherwise the gap is the minimum.
  Dyadic lo = sup(monus(b.lo, a.hi), monus(a.lo, b.hi));
  Dyadic hi = sup(monus(b.hi, a.lo), monus(a.hi, b.lo));
  return {std::move(lo), std::move(hi)};
}

DyadicInterval sup_intervals(const DyadicInterval& a, const DyadicInterval& b) {
  return {sup(a.lo, b.lo), sup(a.hi, b.hi)};
}

DyadicInterval scale_interval(const Dyadic& k, const DyadicInterval& a) {
  return {k * a.lo, k * a.hi};
}

ApproxReal::ApproxReal() : ApproxReal(exact(Dyadic())) {}

ApproxReal ApproxReal::exact(Dyadic value) {
  ApproxReal r{raw_tag{}};
  r.exact_ = value;
  r.fn_ = [value](unsigned) { return DyadicInterval{value, value}; };
  return r;
}

ApproxReal ApproxReal::from_fn(std::function<DyadicInterval(unsigned)> fn) {
  ApproxReal r{raw_tag{}};
  r.fn_ = std::move(fn);
  return r;
}

DyadicInterval ApproxReal::at(unsigned n) const {
  auto it = cache_->find(n);
  if (it != cache_->end()) return it->second;
  DyadicInterval raw = fn_(n);
  if (raw.hi < raw.lo)
    throw Error("invalid-refinement", "interval with hi < lo at precision " +
                                          std::to_string(n));
  if (raw.width() > Dyadic::pow2_inv(n))
    throw Error("invalid-refinement",
                "interval wider than 2^-" + std::to_string(n) + ": " + raw.str());
  // Intersecting with the previous level keeps refinements nested even when
  // the underlying query is only outward-correct.
  DyadicInterval out = (n == 0) ? raw : intersect(at(n - 1), raw);
  cache_->emplace(n, out);
  return out;
}

ApproxReal operator+(const ApproxReal& a, const ApproxReal& b) {
  if (a.exact_ && b.exact_) return ApproxReal::exact(*a.exact_ + *b.exact_);
  ApproxReal r{ApproxReal::raw_tag{}};
  r.fn_ = [a, b](unsigned n) { return add_intervals(a.at(n + 1), b.at(n + 1)); };
  return r;
}

ApproxReal dis(const ApproxReal& a, const ApproxReal& b) {
  if (a.exact_ && b.exact_) return ApproxReal::exact(dis(*a.exact_, *b.exact_));
  ApproxReal r{ApproxReal::raw_tag{}};
  r.fn_ = [a, b](unsigned n) { return dis_intervals(a.at(n + 1), b.at(n + 1)); };
  return r;
}

ApproxReal sup(const ApproxReal& a, const ApproxReal& b) {
  if (a.exact_ && b.exact_) return ApproxReal::exact(sup(*a.exact_, *b.exact_));
  ApproxReal r{ApproxReal::raw_tag{}};
  r.fn_ = [a, b](unsigned n) { return sup_intervals(a.at(n), b.at(n)); };
  return r;
}

ApproxReal ApproxReal::scaled(const Dyadic& k) const {
  if (exact_) return ApproxReal::exact(k * *exact_);
  // A width-2^-m interval scales to width k * 2^-m; query deep enough that
  // k * 2^-(n+shift) <= 2^-n.
  std::uint32_t shift = 0;
  Dyadic bound(1);
  while (bound < k) {
    bound = bound + bound;
    ++shift;
  }
  ApproxReal self = *this;
  ApproxReal r{raw_tag{}};
  r.fn_ = [self, k, shift](unsigned n) { return scale_interval(k, self.at(n + shift)); };
  return r;
}

ApproxReal ApproxReal::halved() const {
  if (exact_) return ApproxReal::exact(exact_->half());
  ApproxReal self = *this;
  ApproxReal r{raw_tag{}};
  r.fn_ = [self](unsigned n) {
    DyadicInterval i = self.at(n);
    return DyadicInterval{i.lo.half(), i.hi.half()};
  };
  return r;
}

}  // namespace ury
