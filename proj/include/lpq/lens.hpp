#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lpq/modp.hpp"

namespace lpq {

/// The lens space L(p,q) = S^3 / Z_p, p prime, with v the inverse of q mod p.
class LensSpace {
public:
  LensSpace(PrimeModulus p, Residue q);

  std::int64_t p() const noexcept { return p_.value(); }
  std::int64_t q() const noexcept { return q_.value(); }
  std::int64_t v() const noexcept { return v_.value(); }
  PrimeModulus modulus() const noexcept { return p_; }
  Residue q_residue() const noexcept { return q_; }
  Residue v_residue() const noexcept { return v_; }

  // 1 < q < p-1, the range where the Reeb dynamics has two distinct exceptional orbits.
  bool standard_range() const noexcept { return standard_range_; }

  Residue residue(std::int64_t a) const { return Residue(a, p_); }

private:
  PrimeModulus p_;
  Residue q_;
  Residue v_;
  bool standard_range_;
};

/// Throws NotPrime or QOutOfRange (q must satisfy 0 < q < p).
LensSpace make_lens(std::int64_t p, std::int64_t q);

// Throw NotStandardRange unless 1 < q < p-1.
void require_standard(const LensSpace& lens);

/// Poincare dual of the Euler class of the contact structure, in units of [gamma_0]: q+1 mod p.
Residue euler_class_pd(const LensSpace& lens);

// Classification predicates. Mixed p throws ModulusMismatch.
bool homotopy_equivalent(const LensSpace& a, const LensSpace& b);
bool diffeomorphic(const LensSpace& a, const LensSpace& b);
/// Necessary condition for a positive contactomorphism between the standard structures:
/// q == q' or q == q'^{-1}. Both spaces must be in standard range.
bool positive_contactomorphism_possible(const LensSpace& a, const LensSpace& b);

struct ClassReport {
  std::int64_t p = 0;
  std::vector<std::vector<std::int64_t>> diffeomorphism_classes;
  std::vector<std::vector<std::int64_t>> homotopy_classes;
  // (q, q') with q < q', homotopy equivalent but not diffeomorphic
  std::vector<std::pair<std::int64_t, std::int64_t>> exotic_pairs;
};

ClassReport enumerate_classes(std::int64_t p);

}  // namespace lpq
