#include "lpq/orbits.hpp"

#include <string>

#include "lpq/error.hpp"

namespace lpq {

namespace {

void require_positive(std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "multiplicity must be >= 1, got " + std::to_string(k));
}

void require_quotient(const OrbitClass& o) {
  if (o.ambient != Ambient::LensQuotient)
    throw Error(ErrorKind::InvalidArgument, "operation needs an orbit in the lens quotient");
}

CzIndex quotient_index(const LensSpace& lens, std::int64_t k, std::int64_t weight) {
  require_standard(lens);
  require_positive(k);
  if (k % lens.p() == 0)
    throw Error(ErrorKind::DegenerateOrbit, std::to_string(k) + " is divisible by p=" + std::to_string(lens.p()));
  const std::int64_t winding = checked_mul(k, 1 - weight);
  return CzIndex::from_integer(checked_add(checked_mul(2, floor_div(winding, lens.p())), 1));
}

}  // namespace

std::string_view to_string(Core core) {
  switch (core) {
    case Core::Gamma0: return "gamma_0";
    case Core::GammaInfty: return "gamma_infty";
    case Core::Contractible: return "contractible";
  }
  return "?";
}

OrbitClass::OrbitClass(Core c, std::int64_t k, Ambient a) : core(c), multiplicity(k), ambient(a) {
  require_positive(k);
}

CzIndex CzIndex::from_integer(std::int64_t mu) { return CzIndex{checked_mul(2, mu)}; }

std::int64_t CzIndex::integer() const {
  if (!is_integer())
    throw Error(ErrorKind::HalfIntegerResult, "index " + value().str() + " is not an integer");
  return doubled_value / 2;
}

Rational action(const OrbitClass& orbit, const LensSpace& lens) {
  if (orbit.ambient == Ambient::SphereCover || orbit.core == Core::Contractible)
    return Rational(orbit.multiplicity);
  return Rational(orbit.multiplicity, lens.p());
}

Residue homotopy_class(const OrbitClass& orbit, const LensSpace& lens) {
  require_quotient(orbit);
  switch (orbit.core) {
    case Core::Gamma0: return lens.residue(orbit.multiplicity);
    case Core::GammaInfty: return lens.residue(orbit.multiplicity) * lens.q_residue();
    case Core::Contractible: break;
  }
  return lens.residue(0);
}

bool is_nondegenerate(const OrbitClass& orbit, const LensSpace& lens) {
  require_quotient(orbit);
  if (orbit.core == Core::Contractible)
    throw Error(ErrorKind::WrongCore, "contractible orbits form a Morse-Bott S^2 family");
  return orbit.multiplicity % lens.p() != 0;
}

int orbit_space_dim(const OrbitClass& orbit, const LensSpace& lens) {
  if (orbit.ambient == Ambient::SphereCover || orbit.core == Core::Contractible) return 2;
  if (orbit.multiplicity % lens.p() == 0)
    throw Error(ErrorKind::DegenerateNonContractible,
                "non-contractible orbit with multiplicity divisible by p lies in an S^2 family");
  return 0;
}

CzIndex cz_rotation(const Rational& s) {
  // Loop case: an integer winding n gives 2n; otherwise the endpoint is
  // nondegenerate and the path sits between the crossings floor(s) and floor(s)+1.
  if (s.is_integer()) return CzIndex::from_integer(checked_mul(2, s.num()));
  return CzIndex{checked_add(checked_mul(4, s.floor()), 2)};
}

CzIndex cz_gamma_infty(const LensSpace& lens, std::int64_t k) { return quotient_index(lens, k, lens.q()); }

CzIndex cz_gamma_0(const LensSpace& lens, std::int64_t k) { return quotient_index(lens, k, lens.v()); }

CzIndex cz_contractible_sphere(std::int64_t k) {
  require_positive(k);
  return CzIndex::from_integer(checked_mul(4, k));
}

CzIndex cz_lifted_noncontractible(const LensSpace& lens, Core core, std::int64_t k) {
  require_positive(k);
  switch (core) {
    case Core::Gamma0: return cz_rotation(Rational(checked_mul(k, 1 - lens.v())));
    case Core::GammaInfty: return cz_rotation(Rational(checked_mul(k, 1 - lens.q())));
    case Core::Contractible: break;
  }
  throw Error(ErrorKind::WrongCore, "contractible orbits are not expressed in the equivariant trivialization");
}

}  // namespace lpq
