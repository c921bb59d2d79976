#pragma once

#include <cstdint>

namespace lpq {

/// Deterministic primality test; exact for every int64 input in our range (p < 2^31).
bool is_prime(std::int64_t n);

/// A validated prime modulus p < 2^31.
class PrimeModulus {
public:
  explicit PrimeModulus(std::int64_t p);

  std::int64_t value() const noexcept { return p_; }
  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
  std::int64_t p_;
};

/// An element of Z_p kept in canonical form 0 <= value < p.
class Residue {
public:
  Residue(std::int64_t a, PrimeModulus p);

  std::int64_t value() const noexcept { return value_; }
  PrimeModulus modulus() const noexcept { return mod_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue operator-() const { return Residue(-value_, mod_); }

  // Comparing residues of different moduli throws ModulusMismatch.
  friend bool operator==(const Residue& a, const Residue& b);

  // Representative in {1, ..., p}: 0 maps to p.
  std::int64_t positive_rep() const noexcept { return value_ == 0 ? mod_.value() : value_; }

private:
  std::int64_t value_;
  PrimeModulus mod_;
};

Residue canonical_rep(std::int64_t a, PrimeModulus p);

/// Multiplicative inverse by the extended Euclidean algorithm. Throws ZeroInverse on 0.
Residue inv(const Residue& a);

/// True iff a is a nonzero square mod p. Throws ZeroInput on 0.
bool is_quadratic_residue(const Residue& a);

Residue pow(Residue base, std::int64_t exponent);

}  // namespace lpq
