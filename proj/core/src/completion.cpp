#include "ury/completion.hpp"

#include <algorithm>
#include <stdexcept>

#include "ury/errors.hpp"

namespace ury {

NodeId divergent_sequence(Store& store, unsigned n) {
  std::vector<NodeId> s;
  s.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    std::vector<Entry> entries;
    entries.reserve(k);
    for (unsigned j = 0; j < k; ++j)
      entries.push_back({s[j], Dyadic::pow2_inv(j)});
    s.push_back(store.intern(k, std::move(entries)));
  }
  return s[n];
}

UPoint divergent_stream(Store& store) {
  Store* sp = &store;
  return UPoint::from_fn([sp](unsigned n) { return divergent_sequence(*sp, n); });
}

std::optional<std::string> refute_admissibility(const Store& store,
                                                const RealConstraintList& c,
                                                unsigned precision) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      DyadicInterval dij = dist_upoint(store, c[i].point, c[j].point, precision);
      DyadicInterval lhs = dis_intervals(dij, c[i].omega.at(precision));
      DyadicInterval rhs = c[j].omega.at(precision);
      if (lhs.lo > rhs.hi)
        return "pair (" + std::to_string(i) + ", " + std::to_string(j) +
               "): dis(d(x_i, x_j), omega_i) > omega_j by at least " +
               dis(lhs.lo, rhs.hi).str();
    }
  return std::nullopt;
}

namespace {

unsigned precision_for(const Dyadic& bound) {
  // Smallest p with 2^-p <= bound; bound must be positive.
  unsigned p = 0;
  while (Dyadic::pow2_inv(p) > bound) ++p;
  return p;
}

bool all_exact(const RealConstraintList& c) {
  for (const RealConstraint& k : c)
    if (!k.point.exact_rep() || !k.omega.exact_value()) return false;
  return true;
}

ConstraintList exact_constraints(const Store& store, const RealConstraintList& c) {
  ConstraintList out;
  out.reserve(c.size());
  for (const RealConstraint& k : c)
    out.push_back({store.quot(*k.point.exact_rep()), *k.omega.exact_value()});
  return out;
}

}  // namespace

NodeId approximate_constraints(Store& store, const RealConstraintList& c,
                               const Dyadic& eps) {
  if (eps.is_zero()) throw std::invalid_argument("eps must be positive");
  const std::size_t l = c.size();
  if (l == 0) return store.empty();

  // lambda is the largest power-of-two fraction of eps with 4*l*lambda <= eps.
  std::uint32_t shift = 0;
  while ((std::size_t{1} << shift) < 4 * l) ++shift;
  const Dyadic lambda = eps.shifted_down(shift);

  const unsigned omega_prec = precision_for(lambda.half());
  if (auto refuted = refute_admissibility(store, c, omega_prec))
    throw AdmissibilityRefuted(omega_prec, *refuted);

  // Distances within lambda of the prescribed omegas, strictly above them.
  std::vector<Dyadic> alpha;
  alpha.reserve(l);
  const Dyadic seven_half_lambda = (lambda * Dyadic(7)).half();
  for (const RealConstraint& k : c)
    alpha.push_back(k.omega.at(omega_prec).hi + seven_half_lambda);

  // Nodes within lambda of the constraint streams.
  const unsigned point_prec = precision_for(lambda);
  std::vector<NodeId> approx;
  approx.reserve(l);
  for (const RealConstraint& k : c) approx.push_back(k.point.at(point_prec));

  const Dyadic three_lambda = lambda + lambda + lambda;
  auto dd = [&](std::size_t i, std::size_t j) {
    Dyadic d = store.distance(approx[i], approx[j]);
    return i == j ? d : d + three_lambda;
  };

  // The padded predecessors a_k: earlier a_i at the padded distances, then
  // the raw approximant at the sup of the forced corrections.
  std::vector<NodeId> preds;
  preds.reserve(l);
  for (std::size_t k = 0; k < l; ++k) {
    std::vector<Entry> entries;
    std::uint32_t age = store.age(approx[k]);
    Dyadic correction;
    for (std::size_t i = 0; i < k; ++i) {
      entries.push_back({preds[i], dd(k, i)});
      age = std::max(age, store.age(preds[i]));
      correction = sup(correction, dis(store.distance(preds[i], approx[k]), dd(k, i)));
    }
    entries.push_back({approx[k], correction});
    preds.push_back(store.intern(age + 1, std::move(entries)));
  }

  std::vector<Entry> entries;
  std::uint32_t age = 0;
  for (std::size_t k = 0; k < l; ++k) {
    entries.push_back({preds[k], alpha[k]});
    age = std::max(age, store.age(preds[k]));
  }
  return store.intern(age + 1, std::move(entries));
}

UPoint ext_complete(Store& store, RealConstraintList c) {
  if (all_exact(c)) {
    ConstraintList ec = exact_constraints(store, c);
    if (!check_prms(store, ec))
      throw AdmissibilityRefuted(0, "exact constraint list fails the inequalities");
    return UPoint::exact_unchecked(ext_d(store, ec).id);
  }
  Store* sp = &store;
  return UPoint::from_fn([sp, c = std::move(c)](unsigned n) {
    NodeId approx = approximate_constraints(*sp, c, Dyadic::pow2_inv(n + 2));
    ConstraintList cl;
    for (const Entry& e : sp->node(approx).entries)
      cl.push_back({QuotPoint{e.pred}, e.alpha});
    return ext_d(*sp, cl).id;
  });
}

DyadicInterval fx_eval(const Store& store, const RealConstraintList& c, NodeId a,
                       unsigned n) {
  store.quot(a);  // must be permissible
  const unsigned p = n + 1;
  auto go = [&](auto&& self, NodeId id) -> DyadicInterval {
    DyadicInterval acc{Dyadic(), Dyadic()};  // sup of the empty set
    for (const RealConstraint& k : c) {
      DyadicInterval d = dist_upoint(store, k.point, UPoint::exact_unchecked(id), p);
      acc = sup_intervals(acc, dis_intervals(d, k.omega.at(p)));
    }
    for (const Entry& e : store.node(id).entries) {
      DyadicInterval sub = self(self, e.pred);
      acc = sup_intervals(acc, dis_intervals(sub, {e.alpha, e.alpha}));
    }
    return acc;
  };
  return go(go, a);
}

UPoint homotopy(Store& store, const Dyadic& t, const UPoint& x, const UPoint& z) {
  if (t > Dyadic(1)) throw std::invalid_argument("t must lie in [0, 1]");
  ApproxReal d = dist_real(store, x, z);
  RealConstraintList c;
  c.push_back({x, d.scaled(t)});
  c.push_back({z, d.scaled(dis(Dyadic(1), t))});
  return ext_complete(store, std::move(c));
}

QuotPoint homotopy_sample(Store& store, const Dyadic& t, const UPoint& x,
                          const UPoint& z, unsigned n) {
  return store.quot(homotopy(store, t, x, z).at(n));
}

namespace {

void validate_totally_bounded(Store& store, const TotallyBoundedSpace& A,
                              const std::vector<QuotPoint>& images,
                              const std::vector<Dyadic>& x_dists, unsigned upto_level) {
  if (A.space == nullptr) throw std::invalid_argument("missing ambient space");
  if (images.size() < A.enumeration.size() || x_dists.size() < A.enumeration.size())
    throw std::invalid_argument("images and query distances must cover the enumeration");

  const MetricSpace& X = *A.space;
  std::size_t prev = 0;
  for (unsigned m = 0; m <= upto_level; ++m) {
    std::size_t am = A.modulus(m);
    if (am < m || am < prev)
      throw ModulusViolation("modulus must be increasing with a(n) >= n");
    if (am > A.enumeration.size())
      throw ModulusViolation("modulus exceeds the declared enumeration at level " +
                             std::to_string(m));
    prev = am;
  }
  // Net condition between consecutive levels.
  for (unsigned m = 0; m + 1 <= upto_level; ++m) {
    Dyadic r = Dyadic::pow2_inv(m);
    for (std::size_t j = A.modulus(m); j < A.modulus(m + 1); ++j) {
      bool covered = false;
      for (std::size_t k = 0; k < A.modulus(m) && !covered; ++k)
        covered = X.dist(A.enumeration[j], A.enumeration[k]) <= r;
      if (!covered)
        throw ModulusViolation("enumerated point " + std::to_string(j) +
                               " is not within 2^-" + std::to_string(m) +
                               " of the level-" + std::to_string(m) + " prefix");
    }
  }
  // Anchors must be isometric on the widest prefix used.
  std::size_t top = A.modulus(upto_level);
  for (std::size_t i = 0; i < top; ++i)
    for (std::size_t j = 0; j < top; ++j)
      if (X.dist(A.enumeration[i], A.enumeration[j]) !=
          store.distance(images[i].id, images[j].id))
        throw NotIsometry("anchor images break distance at (" + std::to_string(i) +
                          ", " + std::to_string(j) + ")");
}

}  // namespace

QuotPoint totally_bounded_stage(Store& store, const TotallyBoundedSpace& A,
                                const std::vector<QuotPoint>& images,
                                const std::vector<Dyadic>& x_dists, unsigned n) {
  ConstraintList c;
  std::size_t an = A.modulus(n);
  c.reserve(an);
  for (std::size_t i = 0; i < an; ++i) c.push_back({images[i], x_dists[i]});
  return ext_d(store, c);
}

QuotPoint extend_totally_bounded(Store& store, const TotallyBoundedSpace& A,
                                 const std::vector<QuotPoint>& images,
                                 const std::vector<Dyadic>& x_dists, unsigned n) {
  validate_totally_bounded(store, A, images, x_dists, n + 1);
  return totally_bounded_stage(store, A, images, x_dists, n + 1);
}

UPoint extend_totally_bounded_stream(Store& store, const TotallyBoundedSpace& A,
                                     std::vector<QuotPoint> images,
                                     std::vector<Dyadic> x_dists) {
  Store* sp = &store;
  auto shared_images = std::make_shared<std::vector<QuotPoint>>(std::move(images));
  auto shared_dists = std::make_shared<std::vector<Dyadic>>(std::move(x_dists));
  auto space = A;
  return UPoint::from_fn([sp, space, shared_images, shared_dists](unsigned m) {
    validate_totally_bounded(*sp, space, *shared_images, *shared_dists, m + 2);
    return totally_bounded_stage(*sp, space, *shared_images, *shared_dists, m + 2).id;
  });
}

}  // namespace ury
