#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ury {

/// Exact nonnegative dyadic rational m / 2^k.
///
/// Always kept normalized: either k == 0 or m is odd. Equality is structural
/// on the normalized form. There are no negatives; the only subtraction-like
/// operations are dis (absolute difference) and monus (truncated difference).
class Dyadic {
public:
  Dyadic() : mant_(0), exp_(0) {}
  Dyadic(unsigned long n) : mant_(n), exp_(0) {}  // NOLINT: integers embed
  Dyadic(mpz_class mantissa, std::uint32_t exponent);

  static Dyadic pow2(std::uint32_t k);      // 2^k
  static Dyadic pow2_inv(std::uint32_t k);  // 2^-k

  /// Parses "m/2^k" or a bare decimal "m" (meaning m/2^0). Normalizes.
  static Dyadic parse(std::string_view text);

  const mpz_class& mantissa() const { return mant_; }
  std::uint32_t exponent() const { return exp_; }
  bool is_zero() const { return mant_ == 0; }

  Dyadic half() const;
  /// x >> k, i.e. x / 2^k, exact.
  Dyadic shifted_down(std::uint32_t k) const;

  /// Normalized text form "m/2^k", always with the exponent part.
  std::string str() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.mant_ == b.mant_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b);
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

  std::size_t hash() const;

private:
  mpz_class mant_;
  std::uint32_t exp_;

  void normalize();
};

/// Absolute difference |a - b|; the internal distance of the dyadic disring.
Dyadic dis(const Dyadic& a, const Dyadic& b);

/// Truncated difference max(a - b, 0).
Dyadic monus(const Dyadic& a, const Dyadic& b);

inline const Dyadic& sup(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }
inline const Dyadic& inf(const Dyadic& a, const Dyadic& b) { return a < b ? a : b; }

struct DyadicHash {
  std::size_t operator()(const Dyadic& d) const { return d.hash(); }
};

}  // namespace ury
