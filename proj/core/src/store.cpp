#include "ury/store.hpp"

#include <string>

#include "ury/errors.hpp"

namespace ury {

std::size_t Store::NodeHash::operator()(const TupleNode& n) const {
  std::size_t h = std::hash<std::uint32_t>{}(n.age);
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const Entry& e : n.entries) {
    mix(std::hash<NodeId>{}(e.pred));
    mix(e.alpha.hash());
  }
  return h;
}

Store::Store() { intern(0, {}); }

const TupleNode& Store::node(NodeId id) const {
  if (id >= nodes_.size())
    throw Error("unknown-node", "node id " + std::to_string(id) + " does not exist");
  return nodes_[id];
}

NodeId Store::intern(std::uint32_t age, std::vector<Entry> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].pred >= nodes_.size())
      throw AgeViolation("entry " + std::to_string(i) + ": predecessor id " +
                         std::to_string(entries[i].pred) + " does not exist");
    if (nodes_[entries[i].pred].age >= age)
      throw AgeViolation("entry " + std::to_string(i) + ": predecessor age " +
                         std::to_string(nodes_[entries[i].pred].age) +
                         " is not below tuple age " + std::to_string(age));
  }
  TupleNode n{age, std::move(entries)};
  auto it = interned_.find(n);
  if (it != interned_.end()) return it->second;
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(n);
  interned_.emplace(std::move(n), id);
  return id;
}

const Dyadic& Store::distance(NodeId a, NodeId b) const {
  if (a > b) std::swap(a, b);
  std::uint64_t key = pair_key(a, b);
  auto it = dist_memo_.find(key);
  if (it != dist_memo_.end()) return it->second;

  const TupleNode& na = node(a);
  const TupleNode& nb = node(b);
  // sup over the empty set is 0, which covers the base case.
  Dyadic best;
  for (const Entry& e : na.entries) best = sup(best, dis(distance(e.pred, b), e.alpha));
  for (const Entry& e : nb.entries) best = sup(best, dis(distance(a, e.pred), e.alpha));
  return dist_memo_.emplace(key, std::move(best)).first->second;
}

bool Store::is_permissible(NodeId id) const {
  if (id >= nodes_.size())
    throw Error("unknown-node", "node id " + std::to_string(id) + " does not exist");
  if (perm_memo_.size() < nodes_.size()) perm_memo_.resize(nodes_.size(), -1);
  if (perm_memo_[id] >= 0) return perm_memo_[id] == 1;

  const TupleNode& n = nodes_[id];
  bool ok = true;
  for (const Entry& e : n.entries)
    if (!is_permissible(e.pred)) {
      ok = false;
      break;
    }
  if (ok) {
    for (std::size_t i = 0; ok && i < n.entries.size(); ++i)
      for (std::size_t j = 0; j < n.entries.size(); ++j)
        if (dis(distance(n.entries[i].pred, n.entries[j].pred), n.entries[i].alpha) >
            n.entries[j].alpha) {
          ok = false;
          break;
        }
  }
  perm_memo_[id] = ok ? 1 : 0;
  return ok;
}

QuotPoint Store::quot(NodeId id) const {
  if (!is_permissible(id))
    throw NotPermissible("node " + std::to_string(id) + " fails the pairwise constraints");
  return QuotPoint{id};
}

NodeId Store::retract(NodeId id) {
  auto it = retract_memo_.find(id);
  if (it != retract_memo_.end()) return it->second;

  const TupleNode n = node(id);  // copy: interning below may reallocate
  std::vector<Entry> out;
  out.reserve(n.entries.size());
  for (const Entry& e : n.entries) {
    NodeId rp = retract(e.pred);
    out.push_back({rp, distance(id, rp)});
  }
  NodeId r = intern(n.age, std::move(out));
  retract_memo_.emplace(id, r);
  return r;
}

bool Store::perturbation_bound_check(NodeId a, NodeId b, const Dyadic& eps,
                                     const Dyadic& eps2) const {
  const TupleNode& na = node(a);
  const TupleNode& nb = node(b);
  if (na.length() != nb.length())
    throw HypothesisViolated("tuples have different lengths");
  for (std::size_t i = 0; i < na.length(); ++i) {
    if (dis(na.entries[i].alpha, nb.entries[i].alpha) > eps)
      throw HypothesisViolated("entry " + std::to_string(i) +
                               ": distances differ by more than eps");
    if (distance(na.entries[i].pred, nb.entries[i].pred) > eps2)
      throw HypothesisViolated("entry " + std::to_string(i) +
                               ": predecessors are more than eps' apart");
  }
  return distance(a, b) <= eps + eps2;
}

NodeId Store::dis_tuples(NodeId a, NodeId b) {
  // The age-0 empty tuple is the neutral element.
  if (a == 0) return b;
  if (b == 0) return a;
  std::uint64_t key = pair_key(a, b);
  auto it = dis_tuples_memo_.find(key);
  if (it != dis_tuples_memo_.end()) return it->second;

  const TupleNode na = node(a);  // copies: recursion interns
  const TupleNode nb = node(b);
  std::vector<Entry> out;
  out.reserve(na.length() + nb.length());
  for (const Entry& e : na.entries) out.push_back({dis_tuples(e.pred, b), e.alpha});
  for (const Entry& e : nb.entries) out.push_back({dis_tuples(a, e.pred), e.alpha});
  NodeId r = intern(na.age + nb.age, std::move(out));
  dis_tuples_memo_.emplace(key, r);
  return r;
}

NodeId Store::scalar_mul(const Dyadic& lambda, NodeId a) {
  std::unordered_map<NodeId, NodeId> memo;
  auto go = [&](auto&& self, NodeId id) -> NodeId {
    auto it = memo.find(id);
    if (it != memo.end()) return it->second;
    const TupleNode n = node(id);
    std::vector<Entry> out;
    out.reserve(n.entries.size());
    for (const Entry& e : n.entries) out.push_back({self(self, e.pred), lambda * e.alpha});
    NodeId r = intern(n.age, std::move(out));
    memo.emplace(id, r);
    return r;
  };
  return go(go, a);
}

}  // namespace ury
