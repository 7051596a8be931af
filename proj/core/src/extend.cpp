#include "ury/extend.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "ury/errors.hpp"

namespace ury {

bool check_prms(const Store& store, const ConstraintList& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (dis(store.distance(c[i].point.id, c[j].point.id), c[i].chi) > c[j].chi)
        return false;
  return true;
}

QuotPoint ext_d(Store& store, const ConstraintList& c) {
  if (!check_prms(store, c))
    throw PrmsViolation("constraint list fails the compatibility inequalities");
  std::uint32_t age = 0;
  std::vector<Entry> entries;
  entries.reserve(c.size());
  for (const Constraint& k : c) {
    age = std::max(age, store.age(k.point.id));
    entries.push_back({k.point.id, k.chi});
  }
  return QuotPoint{store.intern(age + 1, std::move(entries))};
}

void require_isometry(const Store& store, const MetricSpace& space,
                      const PartialIsometry& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (space.dist(f[i].source, f[j].source) !=
          store.distance(f[i].image.id, f[j].image.id))
        throw NotIsometry("anchor pair (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") does not preserve distance");
}

PartialIsometry extend_isometry(Store& store, const MetricSpace& space,
                                const PartialIsometry& f, std::size_t upto) {
  require_isometry(store, space, f);
  upto = std::min(upto, space.enumeration_size());

  PartialIsometry out = f;
  for (std::size_t n = 0; n < upto; ++n) {
    if (!space.present(n)) continue;
    ConstraintList c;
    c.reserve(out.size());
    for (const IsometryPair& p : out)
      c.push_back({p.image, space.dist(n, p.source)});
    out.push_back({n, ext_d(store, c)});
  }
  return out;
}

BackForthState back_and_forth(Store& store, const UryPresentation& side1,
                              const UryPresentation& side2, std::size_t rounds) {
  if (side1.enumeration.size() < rounds || side2.enumeration.size() < rounds)
    throw std::invalid_argument("presentations enumerate fewer points than rounds");

  BackForthState st;
  st.rounds = rounds;
  for (std::size_t n = 0; n < rounds; ++n) {
    NodeId sp = side1.enumeration[n];
    NodeId spp = side2.enumeration[n];

    // Forth: place s'(n) and its image a built in side 2.
    ConstraintList ca;
    ca.reserve(st.placed1.size());
    for (std::size_t i = 0; i < st.placed1.size(); ++i)
      ca.push_back({QuotPoint{st.f_images[i]}, store.distance(sp, st.placed1[i])});
    NodeId a = ext_d(store, ca).id;
    st.placed1.push_back(sp);
    st.f_images.push_back(a);
    st.placed2.push_back(a);
    st.g_images.push_back(sp);

    // Back: place s''(n) and its preimage b built in side 1, constrained
    // against every point placed on side 2 so far (including a).
    ConstraintList cb;
    cb.reserve(st.placed2.size());
    for (std::size_t i = 0; i < st.placed2.size(); ++i)
      cb.push_back({QuotPoint{st.g_images[i]}, store.distance(spp, st.placed2[i])});
    NodeId b = ext_d(store, cb).id;
    st.placed1.push_back(b);
    st.f_images.push_back(spp);
    st.placed2.push_back(spp);
    st.g_images.push_back(b);
  }
  return st;
}

UryPresentation shipped_presentation(Store& store) {
  UryPresentation p;
  std::unordered_set<NodeId> seen;
  auto push = [&](NodeId id) {
    if (store.is_permissible(id) && seen.insert(id).second) p.enumeration.push_back(id);
  };
  push(store.empty());

  const Dyadic half = Dyadic::pow2_inv(1);
  const std::vector<Dyadic> alphas = {half, Dyadic(1), Dyadic(1) + half, Dyadic(2)};

  for (const Dyadic& a : alphas) push(store.intern(1, {{store.empty(), a}}));

  std::vector<NodeId> level = p.enumeration;
  for (NodeId base : level)
    for (const Dyadic& a : alphas)
      push(store.retract(store.intern(store.age(base) + 1, {{base, a}})));

  const std::vector<std::pair<Dyadic, Dyadic>> alpha_pairs = {
      {half, Dyadic(1)}, {Dyadic(1), Dyadic(2)}, {Dyadic(1) + half, half}};
  for (NodeId x : level)
    for (NodeId y : level) {
      if (x == y) continue;
      for (const auto& [ax, ay] : alpha_pairs) {
        std::uint32_t age = std::max(store.age(x), store.age(y)) + 1;
        push(store.retract(store.intern(age, {{x, ax}, {y, ay}})));
      }
    }
  return p;
}

UryPresentation permuted_presentation(const UryPresentation& p, std::uint64_t seed) {
  UryPresentation q = p;
  std::mt19937_64 rng(seed);
  std::shuffle(q.enumeration.begin(), q.enumeration.end(), rng);
  return q;
}

std::string verify_back_forth(const Store& store, const BackForthState& st) {
  const std::size_t n = st.placed1.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!store.is_permissible(st.placed1[i]) || !store.is_permissible(st.placed2[i]))
      return "placed point " + std::to_string(i) + " is not permissible";
    for (std::size_t j = 0; j < n; ++j) {
      if (store.distance(st.placed1[i], st.placed1[j]) !=
          store.distance(st.f_images[i], st.f_images[j]))
        return "f breaks distance on placed pair (" + std::to_string(i) + ", " +
               std::to_string(j) + ")";
      if (store.distance(st.placed2[i], st.placed2[j]) !=
          store.distance(st.g_images[i], st.g_images[j]))
        return "g breaks distance on placed pair (" + std::to_string(i) + ", " +
               std::to_string(j) + ")";
    }
  }
  // Mutual inverses up to quot_eq: g(f(x)) ~ x and f(g(y)) ~ y. The round
  // construction aligns f_images with placed2 and g_images with placed1, so
  // composing means matching the image back through the other side's list.
  for (std::size_t i = 0; i < n; ++i) {
    // f maps placed1[i] to f_images[i]; find where that point sits on side 2
    // and check g sends it back to something at distance zero.
    for (std::size_t j = 0; j < n; ++j) {
      if (store.distance(st.f_images[i], st.placed2[j]).is_zero() &&
          !store.distance(st.g_images[j], st.placed1[i]).is_zero())
        return "g(f(x)) != x at placed index " + std::to_string(i);
      if (store.distance(st.g_images[i], st.placed1[j]).is_zero() &&
          !store.distance(st.f_images[j], st.placed2[i]).is_zero())
        return "f(g(y)) != y at placed index " + std::to_string(i);
    }
  }
  return "";
}

DyadicInterval sup_distance_between_extensions(Store& store, const MetricSpace& space,
                                               const PartialIsometry& data1,
                                               const PartialIsometry& data2,
                                               const Dyadic& eps, std::size_t prefix) {
  if (data1.size() != data2.size())
    throw std::invalid_argument("anchor lists must have equal length");
  require_isometry(store, space, data1);
  require_isometry(store, space, data2);

  std::size_t limit = std::min(prefix + 1, space.enumeration_size());
  auto covered = [&](std::size_t anchor) {
    for (std::size_t k = 0; k < limit; ++k)
      if (space.present(k) && space.dist(anchor, k) <= eps) return true;
    return false;
  };
  for (const PartialIsometry* d : {&data1, &data2})
    for (const IsometryPair& p : *d)
      if (!covered(p.source))
        throw InsufficientPrefix("anchor '" + space.label(p.source) +
                                 "' has no prefix point within eps");

  PartialIsometry w = extend_isometry(store, space, data1, limit);
  PartialIsometry z = extend_isometry(store, space, data2, limit);
  // Extensions list anchors first, then placed enumerated points in order;
  // walk the placed tails in lockstep.
  Dyadic b;
  std::size_t wi = data1.size(), zi = data2.size();
  for (; wi < w.size() && zi < z.size(); ++wi, ++zi)
    b = sup(b, store.distance(w[wi].image.id, z[zi].image.id));
  return DyadicInterval{b, b + eps + eps};
}

Dyadic dp_metric(const Store& store, const ConstraintList& c1, const ConstraintList& c2) {
  if (c1.size() != c2.size())
    throw std::invalid_argument("constraint lists must have equal length");
  Dyadic dpoints, dchis;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    dpoints = sup(dpoints, store.distance(c1[i].point.id, c2[i].point.id));
    dchis = sup(dchis, dis(c1[i].chi, c2[i].chi));
  }
  return dpoints + dchis;
}

bool dp_nonexpansive_check(Store& store, const ConstraintList& c1,
                           const ConstraintList& c2) {
  if (!check_prms(store, c1) || !check_prms(store, c2))
    throw PrmsViolation("both constraint lists must be admissible");
  Dyadic lhs = store.distance(ext_d(store, c1).id, ext_d(store, c2).id);
  return lhs <= dp_metric(store, c1, c2);
}

}  // namespace ury
