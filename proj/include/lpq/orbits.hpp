#pragma once

#include <cstdint>
#include <string_view>

#include "lpq/arith.hpp"
#include "lpq/lens.hpp"

namespace lpq {

enum class Core { Gamma0, GammaInfty, Contractible };
enum class Ambient { LensQuotient, SphereCover };

std::string_view to_string(Core core);

/// A closed Reeb orbit class: k-fold cover of an exceptional orbit, or a point of the
/// contractible orbit space S_k.
struct OrbitClass {
  Core core;
  std::int64_t multiplicity;
  Ambient ambient = Ambient::LensQuotient;

  OrbitClass(Core c, std::int64_t k, Ambient a = Ambient::LensQuotient);
};

/// Conley-Zehnder index stored doubled so half-integers stay exact.
struct CzIndex {
  std::int64_t doubled_value = 0;

  static CzIndex from_integer(std::int64_t mu);
  Rational value() const { return Rational(doubled_value, 2); }
  bool is_integer() const noexcept { return doubled_value % 2 == 0; }
  // Throws HalfIntegerResult for half-integer indices.
  std::int64_t integer() const;

  friend bool operator==(const CzIndex&, const CzIndex&) = default;
};

/// Action in units of 2*pi.
Rational action(const OrbitClass& orbit, const LensSpace& lens);

/// Homotopy class as a multiple of [gamma_0] in pi_1(L(p,q)) = Z_p.
Residue homotopy_class(const OrbitClass& orbit, const LensSpace& lens);

bool is_nondegenerate(const OrbitClass& orbit, const LensSpace& lens);

/// Dimension of the orbit family (0 for isolated orbits, 2 for the S^2 families).
int orbit_space_dim(const OrbitClass& orbit, const LensSpace& lens);

/// CZ index of the rotation path t -> exp(2 pi i s t), t in [0,1].
CzIndex cz_rotation(const Rational& s);

/// Index of k * gamma_infty-bar w.r.t. the quotient trivialization: 2 floor(k(1-q)/p) + 1.
CzIndex cz_gamma_infty(const LensSpace& lens, std::int64_t k);
/// Index of k * gamma_0-bar: 2 floor(k(1-v)/p) + 1.
CzIndex cz_gamma_0(const LensSpace& lens, std::int64_t k);

/// Index of a k-fold contractible orbit in S^3 w.r.t. the global trivialization: 4k.
CzIndex cz_contractible_sphere(std::int64_t k);

/// Index of the lifted orbit k * gamma_{0/infty} in S^3 w.r.t. the equivariant trivialization.
CzIndex cz_lifted_noncontractible(const LensSpace& lens, Core core, std::int64_t k);

}  // namespace lpq
