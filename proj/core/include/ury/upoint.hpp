#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "ury/approx.hpp"
#include "ury/store.hpp"

namespace ury {

/// A point of the completed space as a rapid-Cauchy stream of permissible
/// nodes: the approximant at precision n is within 2^-n of every later
/// approximant (and hence of the limit). Queries are cached, so a stream is
/// pure and idempotent.
class UPoint {
public:
  UPoint() = default;

  /// Constant stream at an exact node (checked against the store).
  static UPoint exact(const Store& store, NodeId rep);
  /// Constant stream, permissibility guaranteed by the caller.
  static UPoint exact_unchecked(NodeId rep);
  static UPoint from_fn(std::function<NodeId(unsigned)> fn);

  NodeId at(unsigned n) const;
  const std::optional<NodeId>& exact_rep() const { return exact_; }

private:
  std::function<NodeId(unsigned)> fn_;
  std::optional<NodeId> exact_;
  std::shared_ptr<std::map<unsigned, NodeId>> cache_ =
      std::make_shared<std::map<unsigned, NodeId>>();
};

/// Width-<=2^-n enclosure of the distance between two stream limits, built
/// from the (n+2)-approximants and clamped at zero.
DyadicInterval dist_upoint(const Store& store, const UPoint& x, const UPoint& y,
                           unsigned n);

/// The same distance as an approximable real; exact when both streams are.
/// The store must outlive the returned value.
ApproxReal dist_real(const Store& store, const UPoint& x, const UPoint& y);

}  // namespace ury
