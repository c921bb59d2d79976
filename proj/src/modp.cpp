#include "lpq/modp.hpp"

#include <string>

#include "lpq/arith.hpp"
#include "lpq/error.hpp"

namespace lpq {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

void require_same(const Residue& a, const Residue& b) {
  if (!(a.modulus() == b.modulus()))
    throw Error(ErrorKind::ModulusMismatch, "residues mod " + std::to_string(a.modulus().value()) +
                                                " and mod " + std::to_string(b.modulus().value()));
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
  if (p >= kMaxModulus) throw Error(ErrorKind::InvalidArgument, "modulus must be below 2^31");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

Residue::Residue(std::int64_t a, PrimeModulus p) : value_(floor_mod(a, p.value())), mod_(p) {}

Residue operator+(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(a.value_ + b.value_, a.mod_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(a.value_ - b.value_, a.mod_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same(a, b);
  // both factors are below 2^31, so the product fits
  return Residue(checked_mul(a.value_, b.value_), a.mod_);
}

bool operator==(const Residue& a, const Residue& b) {
  require_same(a, b);
  return a.value_ == b.value_;
}

Residue canonical_rep(std::int64_t a, PrimeModulus p) { return Residue(a, p); }

Residue inv(const Residue& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInverse, "0 has no inverse mod " + std::to_string(a.modulus().value()));
  std::int64_t old_r = a.value(), r = a.modulus().value();
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  return Residue(old_s, a.modulus());
}

Residue pow(Residue base, std::int64_t exponent) {
  if (exponent < 0) {
    base = inv(base);
    exponent = -exponent;
  }
  Residue acc(1, base.modulus());
  while (exponent > 0) {
    if (exponent & 1) acc = acc * base;
    base = base * base;
    exponent >>= 1;
  }
  return acc;
}

bool is_quadratic_residue(const Residue& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "quadratic residue test of 0");
  const std::int64_t p = a.modulus().value();
  if (p == 2) return true;
  // Euler's criterion
  return pow(a, (p - 1) / 2).value() == 1;
}

}  // namespace lpq
