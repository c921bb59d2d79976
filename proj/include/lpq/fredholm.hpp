#pragma once

#include <cstdint>
#include <span>

#include "lpq/lens.hpp"
#include "lpq/moduli.hpp"
#include "lpq/orbits.hpp"

namespace lpq {

struct IndexReport {
  std::int64_t fredholm = 0;
  std::int64_t equivariant = 0;
  bool regular = false;
};

/// Fredholm index 2 c1 + sum(mu+) - sum(mu-) + dims/2 + #punctures - euler.
/// Throws HalfIntegerResult if the doubled bookkeeping leaves an odd total.
std::int64_t fredholm_general(std::int64_t c1_rel, std::span<const CzIndex> cz_pos, std::span<const CzIndex> cz_neg,
                              std::span<const int> dims, std::int64_t n_punct, std::int64_t euler);

/// Index of the pants (k0 gamma_0, kInf gamma_infty | k contractible) in L(p,q),
/// assembled from the quotient CZ indices and the lifted Chern term.
std::int64_t pants_index(const LensSpace& lens, std::int64_t k0, std::int64_t kInf, std::int64_t k);

/// Index of the p-fold lift of that pants in R x S^3, global trivialization (c1 = 0).
std::int64_t lifted_pants_index(const LensSpace& lens, std::int64_t k0, std::int64_t kInf, std::int64_t k);

std::int64_t pants_index_theorem(std::int64_t d_I);
std::int64_t cylinder_index(std::int64_t d_I);

/// Fredholm index of the unparametrized cylinder k0 gamma_0 -> kInf gamma_infty.
std::int64_t cylinder_fredholm_index(const LensSpace& lens, std::int64_t k0, std::int64_t kInf);

/// Dimension of equivariant deformations: 4 floor(d/p) + 4 + 2 s+ + 2 s-.
std::int64_t equivariant_index(std::int64_t d, std::int64_t p, std::int64_t s_plus, std::int64_t s_minus);

IndexReport regularity_report(const LensSpace& lens, const PantsComponent& comp);
IndexReport regularity_report(const LensSpace& lens, const CylinderComponent& comp);

}  // namespace lpq
