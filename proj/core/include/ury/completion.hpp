#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ury/approx.hpp"
#include "ury/extend.hpp"
#include "ury/metricio.hpp"
#include "ury/store.hpp"
#include "ury/upoint.hpp"

namespace ury {

/// The rapid-Cauchy sequence without a limit in the countable space:
/// s_n is the age-n tuple prescribing distance 2^-k to every earlier s_k.
/// Exact facts: d(s_k, s_l) = 2^-min(k,l) for k != l, and every permissible
/// tuple older than n stays at least 2^-n away from s_n.
NodeId divergent_sequence(Store& store, unsigned n);

/// The divergence witness as a stream (query n yields s_n).
UPoint divergent_stream(Store& store);

/// A constraint with real-valued data: the extension point must sit at
/// distance omega (an approximable real) from the stream `point`.
struct RealConstraint {
  UPoint point;
  ApproxReal omega;
};
using RealConstraintList = std::vector<RealConstraint>;

/// Admissibility of real constraints is only semidecidable; this refutes it
/// at the given working precision when some pairwise inequality is strictly
/// violated beyond the interval widths. Returns a description of the
/// violating pair, or nullopt when nothing refutable was found.
std::optional<std::string> refute_admissibility(const Store& store,
                                                const RealConstraintList& c,
                                                unsigned precision);

/// The approximation algorithm: from an admissible real-constraint list and
/// eps > 0, builds a permissible tuple whose predecessors are within eps of
/// the constraint streams and whose prescribed distances are within eps of
/// the omegas, all exactly. Throws AdmissibilityRefuted when the semidecision
/// refutes the input at working precision.
NodeId approximate_constraints(Store& store, const RealConstraintList& c,
                               const Dyadic& eps);

/// Extension with real-valued constraints: a stream whose nth approximant is
/// the one-point extension of approximate_constraints(c, 2^-(n+2)). When
/// every constraint is exact the stream is the exact ext_d result, constant.
/// The store must outlive the returned stream.
UPoint ext_complete(Store& store, RealConstraintList c);

/// Width-<=2^-n enclosure of the location value
/// f_x(a) = sup({d(x_h, [a]) dis omega_h} u {f_x(a_i) dis alpha_i}).
DyadicInterval fx_eval(const Store& store, const RealConstraintList& c, NodeId a,
                       unsigned n);

/// The contraction path H(t, x) = ext((x, t d(x,z)), (z, (1-t) d(x,z))) as a
/// stream; H(0, .) is x and H(1, .) is z up to distance zero.
UPoint homotopy(Store& store, const Dyadic& t, const UPoint& x, const UPoint& z);

/// Approximant of H(t, x) at precision n.
QuotPoint homotopy_sample(Store& store, const Dyadic& t, const UPoint& x,
                          const UPoint& z, unsigned n);

/// A totally bounded subspace of a loaded metric space: an enumeration of
/// present labels plus a covering modulus; the first modulus(n) enumerated
/// points form a 2^-n-net of the subspace.
struct TotallyBoundedSpace {
  const MetricSpace* space = nullptr;
  std::vector<std::size_t> enumeration;        // indices into *space
  std::function<std::size_t(unsigned)> modulus;  // increasing, modulus(n) >= n
};

/// The nth stage of extending an isometry from a totally bounded subspace at
/// the query point: the one-point extension anchored at the first
/// modulus(n) enumerated points. `images` aligns with A.enumeration;
/// `x_dists` gives the exact distances from the query point to the
/// enumerated points.
QuotPoint totally_bounded_stage(Store& store, const TotallyBoundedSpace& A,
                                const std::vector<QuotPoint>& images,
                                const std::vector<Dyadic>& x_dists, unsigned n);

/// The stage-(n+1) approximant, whose tail is bounded by 2^-(n-1)... i.e.
/// consecutive stages differ by at most 2^(-n+1), so the reindexed stream
/// below satisfies the rapid-Cauchy contract. Validates the modulus
/// (ModulusViolation) and the anchor isometry (NotIsometry) on the prefix
/// levels up to n+1.
QuotPoint extend_totally_bounded(Store& store, const TotallyBoundedSpace& A,
                                 const std::vector<QuotPoint>& images,
                                 const std::vector<Dyadic>& x_dists, unsigned n);

/// The extension value at the query point as a stream: query m yields stage
/// m+2, telescoping the stage bound into the 2^-m contract.
UPoint extend_totally_bounded_stream(Store& store, const TotallyBoundedSpace& A,
                                     std::vector<QuotPoint> images,
                                     std::vector<Dyadic> x_dists);

}  // namespace ury
