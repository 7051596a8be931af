#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ury/dyadic.hpp"
#include "ury/interval.hpp"
#include "ury/metricio.hpp"
#include "ury/store.hpp"

namespace ury {

/// One prescribed distance: the extension point must sit exactly chi away
/// from `point`.
struct Constraint {
  QuotPoint point;
  Dyadic chi;
};
using ConstraintList = std::vector<Constraint>;

/// The compatibility condition: dis(d(x_i, x_j), chi_i) <= chi_j for all i, j.
bool check_prms(const Store& store, const ConstraintList& c);

/// One-point extension: interns the tuple of the constraints at age
/// sup(ages)+1. The result realizes every prescribed distance exactly.
/// Throws PrmsViolation when check_prms fails.
QuotPoint ext_d(Store& store, const ConstraintList& c);

/// A finite partial isometry from a metric space's enumeration into the
/// tuple space, as ordered (source index, image) pairs.
struct IsometryPair {
  std::size_t source;
  QuotPoint image;
};
using PartialIsometry = std::vector<IsometryPair>;

/// Throws NotIsometry unless every pair of pairs preserves distance exactly.
void require_isometry(const Store& store, const MetricSpace& space,
                      const PartialIsometry& f);

/// Canonically extends `f` over the first `upto` enumerated points of the
/// space: anchors first, then enumerated points in index order, each placed
/// with ext_d. The result lists f's pairs followed by the placed points.
PartialIsometry extend_isometry(Store& store, const MetricSpace& space,
                                const PartialIsometry& f, std::size_t upto);

/// A presentation of the countable tuple space for the back-and-forth run:
/// an enumeration of permissible nodes over a shared store, with the store's
/// distance and ext_d as the extension operator. Hereditarily closed
/// enumerations (predecessors listed first) make the same-enumeration run
/// the identity.
struct UryPresentation {
  std::vector<NodeId> enumeration;
};

/// State after n rounds: placed points of both sides with the partial maps
/// f (side 1 to side 2) and g (side 2 to side 1) aligned index-by-index.
struct BackForthState {
  std::size_t rounds = 0;
  std::vector<NodeId> placed1, placed2;
  std::vector<NodeId> f_images, g_images;
};

BackForthState back_and_forth(Store& store, const UryPresentation& side1,
                              const UryPresentation& side2, std::size_t rounds);

/// The shipped presentation: a deterministic hereditarily closed family of
/// permissible tuples (every predecessor enumerated before its successors),
/// in creation order.
UryPresentation shipped_presentation(Store& store);

/// The same family under a seeded shuffle; a second presentation for tests
/// and the demo run.
UryPresentation permuted_presentation(const UryPresentation& p, std::uint64_t seed);

/// Exact verification of the round invariants: f and g are isometries on the
/// placed points and mutually inverse up to quot_eq. Returns a description of
/// the first violation, or the empty string.
std::string verify_back_forth(const Store& store, const BackForthState& st);

/// Enclosure [B, B+2eps] of the sup distance between the canonical extensions
/// of two equal-length anchor lists, where B is the sup over the enumerated
/// prefix 0..prefix. Requires every anchor of either list to lie within eps
/// of a present prefix point (InsufficientPrefix otherwise).
DyadicInterval sup_distance_between_extensions(Store& store, const MetricSpace& space,
                                               const PartialIsometry& data1,
                                               const PartialIsometry& data2,
                                               const Dyadic& eps, std::size_t prefix);

/// Asserts non-expansiveness of ext_d under the product metric
/// sup d(x_i, y_i) + sup dis(chi_i, upsilon_i) on equal-length lists.
bool dp_nonexpansive_check(Store& store, const ConstraintList& c1,
                           const ConstraintList& c2);

/// The product metric itself.
Dyadic dp_metric(const Store& store, const ConstraintList& c1, const ConstraintList& c2);

}  // namespace ury
