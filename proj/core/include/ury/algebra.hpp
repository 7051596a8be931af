#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ury/store.hpp"

namespace ury {

/// The homogeneity automorphism x -> x dis a dis b; swaps a and b and is an
/// involution, all up to quot_eq.
QuotPoint swap_automorphism(Store& store, QuotPoint a, QuotPoint b, QuotPoint x);

struct ModuleLawResult {
  std::string name;
  bool holds = true;
  bool expected_to_hold = true;  // the refuted distributivity law expects failure
  std::string witness;
};

struct ModuleLawReport {
  std::size_t samples = 0;
  std::vector<ModuleLawResult> laws;

  /// True when every law matched its expectation (including the refuted one
  /// failing as it must).
  bool as_expected() const {
    for (const auto& l : laws)
      if (l.holds != l.expected_to_hold) return false;
    return true;
  }
  std::string str() const;
};

/// Checks the module laws over `budget` sampled permissible tuples of age
/// <= 3 and sampled dyadic scalars, all comparisons exact (quot_eq or dyadic
/// equality). The scalar distributivity over dis is checked as a refutation:
/// it must fail on the witness shape ((2 dis 1) dis 1) vs 2 on a
/// norm-positive point.
ModuleLawReport check_module_laws(Store& store, std::size_t budget,
                                  std::uint64_t seed = 0x5ca1a21ULL);

}  // namespace ury
