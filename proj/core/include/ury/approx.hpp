#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "ury/dyadic.hpp"
#include "ury/interval.hpp"

namespace ury {

/// A nonnegative real given as a monotone interval refinement: querying at
/// precision n yields a dyadic interval of width at most 2^-n containing the
/// value, and the intervals are nested across precisions.
///
/// Queries are pure and idempotent (answers are cached per point), so a value
/// may be queried repeatedly and at mixed precisions. Exact dyadics carry an
/// exactness tag that arithmetic propagates.
class ApproxReal {
public:
  ApproxReal();  // exact zero

  static ApproxReal exact(Dyadic value);
  static ApproxReal from_fn(std::function<DyadicInterval(unsigned)> fn);

  DyadicInterval at(unsigned n) const;
  const std::optional<Dyadic>& exact_value() const { return exact_; }

  friend ApproxReal operator+(const ApproxReal& a, const ApproxReal& b);
  friend ApproxReal dis(const ApproxReal& a, const ApproxReal& b);
  friend ApproxReal sup(const ApproxReal& a, const ApproxReal& b);
  ApproxReal scaled(const Dyadic& k) const;
  ApproxReal halved() const;

private:
  struct raw_tag {};
  explicit ApproxReal(raw_tag) {}

  std::function<DyadicInterval(unsigned)> fn_;
  std::optional<Dyadic> exact_;
  std::shared_ptr<std::map<unsigned, DyadicInterval>> cache_ =
      std::make_shared<std::map<unsigned, DyadicInterval>>();
};

}  // namespace ury
