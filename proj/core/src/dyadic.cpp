#include "ury/dyadic.hpp"

#include <limits>

#include "ury/errors.hpp"

namespace ury {

namespace {

// Aligns both mantissas to the common exponent sup(ea, eb).
void align(const Dyadic& a, const Dyadic& b, mpz_class& ma, mpz_class& mb,
           std::uint32_t& e) {
  e = a.exponent() > b.exponent() ? a.exponent() : b.exponent();
  ma = a.mantissa() << (e - a.exponent());
  mb = b.mantissa() << (e - b.exponent());
}

}  // namespace

Dyadic::Dyadic(mpz_class mantissa, std::uint32_t exponent)
    : mant_(std::move(mantissa)), exp_(exponent) {
  if (mant_ < 0) throw Error("negative-dyadic", "dyadic mantissa must be nonnegative");
  normalize();
}

void Dyadic::normalize() {
  if (mant_ == 0) {
    exp_ = 0;
    return;
  }
  unsigned long tz = mpz_scan1(mant_.get_mpz_t(), 0);
  if (tz > exp_) tz = exp_;
  if (tz > 0) {
    mant_ >>= tz;
    exp_ -= static_cast<std::uint32_t>(tz);
  }
}

Dyadic Dyadic::pow2(std::uint32_t k) {
  mpz_class m = 1;
  m <<= k;
  return Dyadic(std::move(m), 0);
}

Dyadic Dyadic::pow2_inv(std::uint32_t k) { return Dyadic(1, k); }

Dyadic Dyadic::half() const { return shifted_down(1); }

Dyadic Dyadic::shifted_down(std::uint32_t k) const {
  if (is_zero()) return Dyadic();
  std::uint64_t e = static_cast<std::uint64_t>(exp_) + k;
  if (e > std::numeric_limits<std::uint32_t>::max())
    throw Error("exponent-overflow", "dyadic exponent out of range");
  return Dyadic(mant_, static_cast<std::uint32_t>(e));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  mpz_class ma, mb;
  std::uint32_t e;
  align(a, b, ma, mb, e);
  return Dyadic(ma + mb, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  std::uint64_t e = static_cast<std::uint64_t>(a.exp_) + b.exp_;
  if (e > std::numeric_limits<std::uint32_t>::max())
    throw Error("exponent-overflow", "dyadic exponent out of range");
  return Dyadic(a.mant_ * b.mant_, static_cast<std::uint32_t>(e));
}

bool operator<(const Dyadic& a, const Dyadic& b) {
  mpz_class ma, mb;
  std::uint32_t e;
  align(a, b, ma, mb, e);
  return ma < mb;
}

Dyadic dis(const Dyadic& a, const Dyadic& b) {
  mpz_class ma, mb;
  std::uint32_t e;
  align(a, b, ma, mb, e);
  return Dyadic(ma < mb ? mb - ma : ma - mb, e);
}

Dyadic monus(const Dyadic& a, const Dyadic& b) {
  mpz_class ma, mb;
  std::uint32_t e;
  align(a, b, ma, mb, e);
  if (ma <= mb) return Dyadic();
  return Dyadic(ma - mb, e);
}

std::string Dyadic::str() const {
  return mant_.get_str() + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
  auto fail = [&](std::size_t col, const std::string& msg) -> ParseError {
    return ParseError(0, col, msg + " in dyadic literal '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i >= text.size() || text[i] < '0' || text[i] > '9')
    throw fail(i, "expected digit");
  std::size_t mstart = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  mpz_class m(std::string(text.substr(mstart, i - mstart)), 10);
  if (i == text.size()) return Dyadic(std::move(m), 0);
  if (text.compare(i, 3, "/2^") != 0) throw fail(i, "expected '/2^'");
  i += 3;
  if (i >= text.size() || text[i] < '0' || text[i] > '9')
    throw fail(i, "expected exponent digit");
  std::size_t estart = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i != text.size()) throw fail(i, "trailing characters");
  std::string edigits(text.substr(estart, i - estart));
  if (edigits.size() > 9) throw fail(estart, "exponent out of range");
  unsigned long e = std::stoul(edigits);
  if (e > std::numeric_limits<std::uint32_t>::max())
    throw fail(estart, "exponent out of range");
  return Dyadic(std::move(m), static_cast<std::uint32_t>(e));
}

std::size_t Dyadic::hash() const {
  // Cheap mix; collisions only cost a structural compare.
  unsigned long low = mpz_get_ui(mant_.get_mpz_t());
  std::size_t h = std::hash<unsigned long>{}(low);
  h ^= std::hash<std::size_t>{}(mpz_sizeinbase(mant_.get_mpz_t(), 2)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<std::uint32_t>{}(exp_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace ury
