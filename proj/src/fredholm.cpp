#include "lpq/fredholm.hpp"

#include <string>
#include <vector>

#include "lpq/error.hpp"

namespace lpq {

std::int64_t fredholm_general(std::int64_t c1_rel, std::span<const CzIndex> cz_pos, std::span<const CzIndex> cz_neg,
                              std::span<const int> dims, std::int64_t n_punct, std::int64_t euler) {
  if (static_cast<std::int64_t>(cz_pos.size() + cz_neg.size()) != n_punct ||
      static_cast<std::int64_t>(dims.size()) != n_punct)
    throw Error(ErrorKind::InvalidArgument, "end lists disagree with the puncture count");
  // everything doubled: 4 c1 + sum(2 mu+) - sum(2 mu-) + sum(dims) + 2 n - 2 chi
  std::int64_t twice = checked_mul(4, c1_rel);
  for (const auto& mu : cz_pos) twice = checked_add(twice, mu.doubled_value);
  for (const auto& mu : cz_neg) twice = checked_sub(twice, mu.doubled_value);
  for (int d : dims) twice = checked_add(twice, d);
  twice = checked_add(twice, checked_mul(2, n_punct));
  twice = checked_sub(twice, checked_mul(2, euler));
  if (twice % 2 != 0)
    throw Error(ErrorKind::HalfIntegerResult, "index " + Rational(twice, 2).str() + " is not an integer");
  return twice / 2;
}

std::int64_t pants_index(const LensSpace& lens, std::int64_t k0, std::int64_t kInf, std::int64_t k) {
  require_standard(lens);
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "contractible multiplicity must be >= 1");
  const std::int64_t p = lens.p();
  const std::int64_t mu_inf = cz_gamma_infty(lens, kInf).integer();
  const std::int64_t mu_0 = cz_gamma_0(lens, k0).integer();
  const std::int64_t d = checked_sub(checked_add(k0, kInf), checked_mul(p, k));
  // 2 c1 - mu(k gamma) for the quotient = (2/p)(d + k0 v + kInf q) - 2k
  const std::int64_t chern = checked_add(d, checked_add(checked_mul(k0, lens.v()), checked_mul(kInf, lens.q())));
  if (floor_mod(chern, p) != 0)
    throw Error(ErrorKind::NonIntegralIndex,
                "p does not divide d + k0 v + kInf q = " + std::to_string(chern) + "; asymptotics are inconsistent");
  return mu_inf + mu_0 + 2 * (chern / p) - 2 * k + 2;
}

std::int64_t lifted_pants_index(const LensSpace& lens, std::int64_t k0, std::int64_t kInf, std::int64_t k) {
  const std::int64_t p = lens.p();
  const std::vector<CzIndex> pos{cz_contractible_sphere(k0), cz_contractible_sphere(kInf)};
  const std::vector<CzIndex> neg(static_cast<std::size_t>(p), cz_contractible_sphere(k));
  const std::vector<int> dims(static_cast<std::size_t>(p + 2), 2);
  return fredholm_general(0, pos, neg, dims, p + 2, 2);
}

std::int64_t pants_index_theorem(std::int64_t d_I) {
  if (d_I < 0) throw Error(ErrorKind::InvalidArgument, "d_I must be >= 0");
  return 4 + 4 * d_I;
}

std::int64_t cylinder_index(std::int64_t d_I) {
  if (d_I < 0) throw Error(ErrorKind::InvalidArgument, "d_I must be >= 0");
  return 2 + 4 * d_I;
}

std::int64_t cylinder_fredholm_index(const LensSpace& lens, std::int64_t k0, std::int64_t kInf) {
  require_standard(lens);
  const std::int64_t p = lens.p();
  // lifted cylinder with the equivariant trivialization gives c1 = (k0 v - kInf q + k0 - kInf) / p
  const std::int64_t lifted_c1 = checked_add(checked_sub(checked_mul(k0, lens.v()), checked_mul(kInf, lens.q())),
                                             checked_sub(k0, kInf));
  if (floor_mod(lifted_c1, p) != 0)
    throw Error(ErrorKind::NonIntegralIndex, "relative Chern number of the cylinder is not integral");
  const std::vector<CzIndex> pos{cz_gamma_0(lens, k0)};
  const std::vector<CzIndex> neg{cz_gamma_infty(lens, kInf)};
  const std::vector<int> dims{0, 0};
  return fredholm_general(lifted_c1 / p, pos, neg, dims, 2, 2);
}

std::int64_t equivariant_index(std::int64_t d, std::int64_t p, std::int64_t s_plus, std::int64_t s_minus) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "base curve degree must be >= 1");
  return 4 + 4 * floor_div(d, p) + 2 * s_plus + 2 * s_minus;
}

IndexReport regularity_report(const LensSpace& lens, const PantsComponent& comp) {
  IndexReport out;
  out.fredholm = pants_index(lens, comp.k0, comp.kInf, comp.k);
  out.equivariant = equivariant_index(comp.r + lens.p() * comp.d_I, lens.p(), 0, 0);
  out.regular = out.fredholm == out.equivariant;
  return out;
}

IndexReport regularity_report(const LensSpace& lens, const CylinderComponent& comp) {
  IndexReport out;
  out.fredholm = cylinder_fredholm_index(lens, comp.k0, comp.kInf);
  // fixing the punctures kills the lambda freedom of the base curve
  out.equivariant = equivariant_index(comp.r + lens.p() * comp.d_I, lens.p(), 0, 0) - 2;
  out.regular = out.fredholm == out.equivariant;
  return out;
}

}  // namespace lpq
