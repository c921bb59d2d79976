#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lpq/lens.hpp"
#include "lpq/orbits.hpp"

namespace lpq {

enum class Sign { Positive, Negative };

/// One asymptotic end of a punctured rational curve in R x L(p,q).
struct EndDatum {
  OrbitClass orbit;
  Sign sign;

  bool contractible() const noexcept { return orbit.core == Core::Contractible; }
};

struct EndCounts {
  int n0_plus = 0, n0_minus = 0;
  int ninf_plus = 0, ninf_minus = 0;
  int nc_plus = 0, nc_minus = 0;

  int n_nc() const noexcept { return n0_plus + n0_minus + ninf_plus + ninf_minus; }
  int n_c() const noexcept { return nc_plus + nc_minus; }
  int total() const noexcept { return n_nc() + n_c(); }
};

/// Full asymptotic datum of a rational curve. Construction enforces at least one
/// positive end and k != 0 mod p for every non-contractible end.
class ModuliProblem {
public:
  ModuliProblem(LensSpace lens, std::vector<EndDatum> ends);

  const LensSpace& lens() const noexcept { return lens_; }
  const std::vector<EndDatum>& ends() const noexcept { return ends_; }
  const EndCounts& counts() const noexcept { return counts_; }

  // Sum of multiplicities over ends with the given core and sign.
  std::int64_t total(Core core, Sign sign) const;

private:
  LensSpace lens_;
  std::vector<EndDatum> ends_;
  EndCounts counts_;
};

/// Pair of pants with positive ends k0 * gamma_0, kInf * gamma_infty and one negative
/// contractible end of multiplicity k; r is the degree of the base curve mod p.
struct PantsComponent {
  std::int64_t r = 0;
  std::int64_t d_I = 0;
  std::int64_t k = 0;
  std::int64_t k0 = 0;
  std::int64_t kInf = 0;
  std::int64_t dim = 0;

  friend bool operator==(const PantsComponent&, const PantsComponent&) = default;
};

ModuliProblem pants_problem(const LensSpace& lens, std::int64_t k0, std::int64_t kInf, std::int64_t k);
ModuliProblem pants_problem(const LensSpace& lens, const PantsComponent& comp);

/// Genus of the p-fold branched cover of the domain: (p-1)(n_nc-2)/2.
std::int64_t genus_of_lift(const ModuliProblem& prob);

/// Degree of the lifted base curve forced by the divisor of the section.
std::int64_t degree_condition(const ModuliProblem& prob);

/// d > 0 when there are non-contractible ends (the base curve must be nonconstant), d >= 0 otherwise.
bool degree_admissible(const ModuliProblem& prob);

/// Ends of a rational curve sum to zero in pi_1 = Z_p.
bool homotopy_condition(const ModuliProblem& prob);

struct EndRamification {
  EndDatum end;
  std::int64_t r_bar;  // local degree of the base curve mod p, in {1..p-1}
  std::int64_t m_bar;  // rotation number of the deck generator at the fixed point, in {1..p-1}
};

/// Per non-contractible end, in input order. Requires standard range.
std::vector<EndRamification> ramification_data(const ModuliProblem& prob);

/// Local degrees over 0 and over infinity must each sum to d mod p and not exceed d.
bool local_congruences_hold(const ModuliProblem& prob);

struct CmDimension {
  std::int64_t n0;
  std::int64_t nInf;
  std::int64_t dim;
};

/// Dimension of the base-curve space for ends (0+, 0-, inf+). Throws InconsistentRamification.
CmDimension dim_CM(std::int64_t p, std::int64_t d, std::int64_t r0p, std::int64_t r0m, std::int64_t rinfp);
std::int64_t dim_M(std::int64_t p, std::int64_t d, std::int64_t r0p, std::int64_t r0m, std::int64_t rinfp);

/// All pants components with r in 1..p-1, d_I in [0,max_dI], k in [1,max_k],
/// sorted by (r, d_I, k, k0).
std::vector<PantsComponent> pants_components(const LensSpace& lens, std::int64_t max_dI, std::int64_t max_k);

std::int64_t dim_with_extra_ends(std::int64_t d_I, std::int64_t s_plus, std::int64_t s_minus);

/// Cylinder from k0 * gamma_0 (positive) to kInf * gamma_infty (negative).
struct CylinderComponent {
  std::int64_t r = 0;
  std::int64_t d_I = 0;
  std::int64_t k0 = 0;
  std::int64_t kInf = 0;
  std::int64_t dim = 0;  // unparametrized: 2 + 4 d_I
};

ModuliProblem cylinder_problem(const LensSpace& lens, std::int64_t k0, std::int64_t kInf);

/// For each (r, d_I) emits the max_k smallest admissible kInf, sorted by (r, d_I, kInf).
std::vector<CylinderComponent> cylinder_components(const LensSpace& lens, std::int64_t max_dI, std::int64_t max_k);

/// Mod-p divisibility of D_M - c^* D_L where D_L = l*0 - (l+1)*infinity.
struct SectionCheck {
  bool exists = false;
  std::vector<std::int64_t> coefficients;  // one per non-contractible end
  std::vector<std::int64_t> witness;       // coefficients / p when they all vanish mod p
};

/// Three-end form for ends (0+, inf+, 0-): coefficients
/// (k0m - l r0m), (-k0p - l r0p), ((l+1) rinfp - kInfp).
SectionCheck section_existence_check(const LensSpace& lens, std::int64_t k0p, std::int64_t kInfp, std::int64_t k0m,
                                     std::int64_t r0p, std::int64_t r0m, std::int64_t rinfp, std::int64_t l);

/// General form: one coefficient per non-contractible end of prob, using its ramification data.
SectionCheck section_existence_check(const ModuliProblem& prob, std::int64_t l);

/// The twist l in {1..p-1} that makes every coefficient vanish under the local congruences:
/// l = (v-1)^{-1} mod p.
std::int64_t canonical_section_twist(const LensSpace& lens);

/// Nonzero Laurent coefficient a_n allowed iff m n == target mod p.
bool laurent_exponent_allowed(const Residue& m, const Residue& target, std::int64_t n);

}  // namespace lpq
