#include "lpq/arith.hpp"

#include <numeric>

#include "lpq/error.hpp"

namespace lpq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::QOutOfRange: return "QOutOfRange";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ZeroM: return "ZeroM";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::NotStandardRange: return "NotStandardRange";
    case ErrorKind::WrongCore: return "WrongCore";
    case ErrorKind::DegenerateOrbit: return "DegenerateOrbit";
    case ErrorKind::DegenerateNonContractible: return "DegenerateNonContractible";
    case ErrorKind::TooFewNonContractibleEnds: return "TooFewNonContractibleEnds";
    case ErrorKind::InconsistentRamification: return "InconsistentRamification";
    case ErrorKind::HalfIntegerResult: return "HalfIntegerResult";
    case ErrorKind::NonIntegralIndex: return "NonIntegralIndex";
    case ErrorKind::CongruenceViolation: return "CongruenceViolation";
    case ErrorKind::DegenerateFactors: return "DegenerateFactors";
    case ErrorKind::AdjunctionViolation: return "AdjunctionViolation";
    case ErrorKind::ParityViolation: return "ParityViolation";
  }
  return "Unknown";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "addition overflows int64");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "subtraction overflows int64");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "multiplication overflows int64");
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw Error(ErrorKind::InvalidArgument, "floor_div needs a positive divisor");
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw Error(ErrorKind::InvalidArgument, "floor_mod needs a positive modulus");
  std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (d < 0) {
    n = checked_sub(0, n);
    d = checked_sub(0, d);
  }
  std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                  checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero rational");
  return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

}  // namespace lpq
