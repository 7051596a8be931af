#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ury/dyadic.hpp"

namespace ury {

using NodeId = std::uint32_t;

struct Entry {
  NodeId pred;
  Dyadic alpha;

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.pred == b.pred && a.alpha == b.alpha;
  }
};

/// An interned tuple: age n plus an ordered list of (predecessor, distance)
/// entries. Immutable once interned; every predecessor is strictly younger.
struct TupleNode {
  std::uint32_t age = 0;
  std::vector<Entry> entries;

  std::size_t length() const { return entries.size(); }

  friend bool operator==(const TupleNode& a, const TupleNode& b) {
    return a.age == b.age && a.entries == b.entries;
  }
};

/// A permissible node regarded up to zero distance. Construct through
/// Store::quot (checked) or directly where permissibility is guaranteed.
struct QuotPoint {
  NodeId id = 0;

  friend bool operator==(const QuotPoint& a, const QuotPoint& b) { return a.id == b.id; }
};

/// Append-only table of interned tuples over the dyadic disring, with memo
/// tables for the recursive distance, permissibility verdicts, retraction and
/// the tuple dis operation. Structurally identical tuples share one id; the
/// empty tuple at age 0 is always id 0.
class Store {
public:
  Store();

  NodeId empty() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const TupleNode& node(NodeId id) const;

  std::uint32_t age(NodeId id) const { return node(id).age; }
  std::size_t length(NodeId id) const { return node(id).length(); }

  /// Interns a tuple, creating it if absent. Throws AgeViolation unless every
  /// predecessor exists and has age strictly below `age`.
  NodeId intern(std::uint32_t age, std::vector<Entry> entries);

  /// The recursive sup-based distance; symmetric, memoized, total on the store.
  const Dyadic& distance(NodeId a, NodeId b) const;

  /// d(id, empty tuple).
  const Dyadic& norm(NodeId id) const { return distance(id, 0); }

  /// Hereditary pairwise-constraint check, memoized.
  bool is_permissible(NodeId id) const;

  /// Checked QuotPoint constructor; throws NotPermissible.
  QuotPoint quot(NodeId id) const;

  /// Zero-distance identification on permissible nodes.
  bool quot_eq(QuotPoint a, QuotPoint b) const { return distance(a.id, b.id).is_zero(); }

  /// Retraction onto the permissible tuples: idempotent, identity on
  /// permissible nodes, preserves age and length.
  NodeId retract(NodeId id);

  /// Checks the perturbation bound d(a,b) <= eps + eps2 for same-length
  /// tuples whose entries differ by at most eps in the distances and whose
  /// predecessors are at most eps2 apart. Throws HypothesisViolated when the
  /// inputs fail that premise.
  bool perturbation_bound_check(NodeId a, NodeId b, const Dyadic& eps,
                                const Dyadic& eps2) const;

  /// Tuple dis: age adds, lengths add, empty age-0 tuple acts as identity.
  /// Permissible inputs give a permissible output.
  NodeId dis_tuples(NodeId a, NodeId b);

  /// Scalar multiplication: scales every distance in the tuple, preserving
  /// age and length.
  NodeId scalar_mul(const Dyadic& lambda, NodeId a);

private:
  struct NodeHash {
    std::size_t operator()(const TupleNode& n) const;
  };

  std::vector<TupleNode> nodes_;
  std::unordered_map<TupleNode, NodeId, NodeHash> interned_;
  mutable std::unordered_map<std::uint64_t, Dyadic> dist_memo_;  // unordered id pair
  mutable std::vector<std::int8_t> perm_memo_;                   // -1 unknown, 0 no, 1 yes
  std::unordered_map<NodeId, NodeId> retract_memo_;
  std::unordered_map<std::uint64_t, NodeId> dis_tuples_memo_;    // ordered id pair

  static std::uint64_t pair_key(NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }
};

}  // namespace ury
