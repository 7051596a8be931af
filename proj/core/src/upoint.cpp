#include "ury/upoint.hpp"

#include "ury/errors.hpp"

namespace ury {

UPoint UPoint::exact(const Store& store, NodeId rep) {
  store.quot(rep);  // permissibility check
  return exact_unchecked(rep);
}

UPoint UPoint::exact_unchecked(NodeId rep) {
  UPoint p;
  p.exact_ = rep;
  p.fn_ = [rep](unsigned) { return rep; };
  return p;
}

UPoint UPoint::from_fn(std::function<NodeId(unsigned)> fn) {
  UPoint p;
  p.fn_ = std::move(fn);
  return p;
}

NodeId UPoint::at(unsigned n) const {
  if (!fn_) throw Error("empty-upoint", "querying a default-constructed stream");
  auto it = cache_->find(n);
  if (it != cache_->end()) return it->second;
  NodeId id = fn_(n);
  cache_->emplace(n, id);
  return id;
}

DyadicInterval dist_upoint(const Store& store, const UPoint& x, const UPoint& y,
                           unsigned n) {
  if (x.exact_rep() && y.exact_rep()) {
    const Dyadic& d = store.distance(*x.exact_rep(), *y.exact_rep());
    return {d, d};
  }
  unsigned k = n + 2;
  const Dyadic& d = store.distance(x.at(k), y.at(k));
  Dyadic slack = Dyadic::pow2_inv(n + 1);  // 2 * 2^-k
  return {monus(d, slack), d + slack};
}

ApproxReal dist_real(const Store& store, const UPoint& x, const UPoint& y) {
  if (x.exact_rep() && y.exact_rep())
    return ApproxReal::exact(store.distance(*x.exact_rep(), *y.exact_rep()));
  const Store* s = &store;
  return ApproxReal::from_fn(
      [s, x, y](unsigned n) { return dist_upoint(*s, x, y, n); });
}

}  // namespace ury
