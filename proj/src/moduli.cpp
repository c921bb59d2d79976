#include "lpq/moduli.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "lpq/error.hpp"

namespace lpq {

namespace {

std::int64_t rep(const Residue& r) { return r.value(); }

void require_nonnegative(std::int64_t value, const char* name) {
  if (value < 0) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be >= 0");
}

}  // namespace

ModuliProblem::ModuliProblem(LensSpace lens, std::vector<EndDatum> ends) : lens_(lens), ends_(std::move(ends)) {
  bool has_positive = false;
  for (const auto& e : ends_) {
    if (e.orbit.ambient != Ambient::LensQuotient)
      throw Error(ErrorKind::InvalidArgument, "moduli problems live in the lens quotient");
    const bool pos = e.sign == Sign::Positive;
    has_positive = has_positive || pos;
    switch (e.orbit.core) {
      case Core::Gamma0: ++(pos ? counts_.n0_plus : counts_.n0_minus); break;
      case Core::GammaInfty: ++(pos ? counts_.ninf_plus : counts_.ninf_minus); break;
      case Core::Contractible: ++(pos ? counts_.nc_plus : counts_.nc_minus); break;
    }
    if (!e.contractible() && e.orbit.multiplicity % lens_.p() == 0)
      throw Error(ErrorKind::DegenerateNonContractible,
                  "non-contractible end of multiplicity " + std::to_string(e.orbit.multiplicity) +
                      " is divisible by p");
  }
  if (!has_positive) throw Error(ErrorKind::InvalidArgument, "a curve needs at least one positive end");
}

std::int64_t ModuliProblem::total(Core core, Sign sign) const {
  std::int64_t sum = 0;
  for (const auto& e : ends_)
    if (e.orbit.core == core && e.sign == sign) sum = checked_add(sum, e.orbit.multiplicity);
  return sum;
}

ModuliProblem pants_problem(const LensSpace& lens, std::int64_t k0, std::int64_t kInf, std::int64_t k) {
  return ModuliProblem(lens, {{OrbitClass(Core::Gamma0, k0), Sign::Positive},
                              {OrbitClass(Core::GammaInfty, kInf), Sign::Positive},
                              {OrbitClass(Core::Contractible, k), Sign::Negative}});
}

ModuliProblem pants_problem(const LensSpace& lens, const PantsComponent& comp) {
  return pants_problem(lens, comp.k0, comp.kInf, comp.k);
}

ModuliProblem cylinder_problem(const LensSpace& lens, std::int64_t k0, std::int64_t kInf) {
  return ModuliProblem(lens, {{OrbitClass(Core::Gamma0, k0), Sign::Positive},
                              {OrbitClass(Core::GammaInfty, kInf), Sign::Negative}});
}

std::int64_t genus_of_lift(const ModuliProblem& prob) {
  const int n_nc = prob.counts().n_nc();
  if (n_nc < 2)
    throw Error(ErrorKind::TooFewNonContractibleEnds,
                "branched cover needs >= 2 branch points, got " + std::to_string(n_nc));
  return checked_mul(prob.lens().p() - 1, n_nc - 2) / 2;
}

std::int64_t degree_condition(const ModuliProblem& prob) {
  const std::int64_t p = prob.lens().p();
  std::int64_t d = 0;
  for (const auto& e : prob.ends()) {
    std::int64_t weight = e.contractible() ? checked_mul(p, e.orbit.multiplicity) : e.orbit.multiplicity;
    d = e.sign == Sign::Positive ? checked_add(d, weight) : checked_sub(d, weight);
  }
  return d;
}

bool degree_admissible(const ModuliProblem& prob) {
  const std::int64_t d = degree_condition(prob);
  return prob.counts().n_nc() > 0 ? d > 0 : d >= 0;
}

bool homotopy_condition(const ModuliProblem& prob) {
  const LensSpace& L = prob.lens();
  Residue sum = L.residue(0);
  for (const auto& e : prob.ends()) {
    Residue cls = homotopy_class(e.orbit, L);
    sum = e.sign == Sign::Negative ? sum + cls : sum - cls;
  }
  return sum.is_zero();
}

std::vector<EndRamification> ramification_data(const ModuliProblem& prob) {
  const LensSpace& L = prob.lens();
  require_standard(L);
  const Residue one = L.residue(1);
  const Residue q = L.q_residue();
  const Residue v = L.v_residue();
  std::vector<EndRamification> out;
  for (const auto& e : prob.ends()) {
    if (e.contractible()) continue;
    const Residue k = L.residue(e.orbit.multiplicity);
    const bool pos = e.sign == Sign::Positive;
    Residue r_bar = L.residue(0);
    Residue m_bar = L.residue(0);
    if (e.orbit.core == Core::Gamma0) {
      r_bar = pos ? k * (one - v) : k * (v - one);
      m_bar = (one - q) * inv(r_bar);
    } else {
      r_bar = pos ? k * (one - q) : k * (q - one);
      m_bar = (q - one) * inv(r_bar);
    }
    out.push_back({e, rep(r_bar), rep(m_bar)});
  }
  return out;
}

bool local_congruences_hold(const ModuliProblem& prob) {
  const std::int64_t p = prob.lens().p();
  const std::int64_t d = degree_condition(prob);
  std::int64_t over0 = 0, overInf = 0;
  for (const auto& rd : ramification_data(prob))
    (rd.end.orbit.core == Core::Gamma0 ? over0 : overInf) += rd.r_bar;
  auto fits = [&](std::int64_t s) { return s <= d && floor_mod(d - s, p) == 0; };
  return fits(over0) && fits(overInf);
}

CmDimension dim_CM(std::int64_t p, std::int64_t d, std::int64_t r0p, std::int64_t r0m, std::int64_t rinfp) {
  PrimeModulus mod(p);
  const std::int64_t a = checked_sub(checked_sub(d, r0p), r0m);
  const std::int64_t b = checked_sub(d, rinfp);
  if (floor_mod(a, p) != 0 || floor_mod(b, p) != 0)
    throw Error(ErrorKind::InconsistentRamification,
                "d=" + std::to_string(d) + " is not congruent to the local degrees mod p");
  if (a < 0 || b < 0)
    throw Error(ErrorKind::InconsistentRamification, "local degrees exceed d=" + std::to_string(d));
  CmDimension out{a / p, b / p, 0};
  out.dim = 2 + 2 * out.n0 + 2 * out.nInf;
  return out;
}

std::int64_t dim_M(std::int64_t p, std::int64_t d, std::int64_t r0p, std::int64_t r0m, std::int64_t rinfp) {
  // dim_CM validates; the closed form is 4 + (2/p)(2d - r0p - r0m - rinfp)
  dim_CM(p, d, r0p, r0m, rinfp);
  const std::int64_t numer = checked_sub(checked_sub(checked_sub(checked_mul(2, d), r0p), r0m), rinfp);
  return 4 + 2 * numer / p;
}

std::vector<PantsComponent> pants_components(const LensSpace& lens, std::int64_t max_dI, std::int64_t max_k) {
  require_standard(lens);
  const std::int64_t p = lens.p();
  const Residue q = lens.q_residue();
  const Residue one = lens.residue(1);
  std::vector<PantsComponent> out;
  for (std::int64_t r = 1; r < p; ++r) {
    const std::int64_t k0_class = rep(lens.residue(r) * q * inv(q - one));
    for (std::int64_t dI = 0; dI <= max_dI; ++dI) {
      for (std::int64_t k = 1; k <= max_k; ++k) {
        const std::int64_t sum = checked_add(r, checked_mul(p, dI + k));
        for (std::int64_t k0 = k0_class; k0 < sum; k0 += p)
          out.push_back({r, dI, k, k0, sum - k0, 4 + 4 * dI});
      }
    }
  }
  // already in (r, d_I, k, k0) order by construction; keep the sort as the contract
  std::sort(out.begin(), out.end(), [](const PantsComponent& a, const PantsComponent& b) {
    return std::tie(a.r, a.d_I, a.k, a.k0) < std::tie(b.r, b.d_I, b.k, b.k0);
  });
  return out;
}

std::int64_t dim_with_extra_ends(std::int64_t d_I, std::int64_t s_plus, std::int64_t s_minus) {
  require_nonnegative(d_I, "d_I");
  require_nonnegative(s_plus, "s_plus");
  require_nonnegative(s_minus, "s_minus");
  return 4 + 4 * d_I + 2 * s_plus + 2 * s_minus;
}

std::vector<CylinderComponent> cylinder_components(const LensSpace& lens, std::int64_t max_dI, std::int64_t max_k) {
  require_standard(lens);
  const std::int64_t p = lens.p();
  const Residue one = lens.residue(1);
  std::vector<CylinderComponent> out;
  for (std::int64_t r = 1; r < p; ++r) {
    const std::int64_t kInf_class = rep(lens.residue(r) * inv(lens.q_residue() - one));
    for (std::int64_t dI = 0; dI <= max_dI; ++dI) {
      for (std::int64_t j = 0; j < max_k; ++j) {
        const std::int64_t kInf = kInf_class + p * j;
        out.push_back({r, dI, kInf + r + p * dI, kInf, 2 + 4 * dI});
      }
    }
  }
  return out;
}

SectionCheck section_existence_check(const LensSpace& lens, std::int64_t k0p, std::int64_t kInfp, std::int64_t k0m,
                                     std::int64_t r0p, std::int64_t r0m, std::int64_t rinfp, std::int64_t l) {
  require_standard(lens);
  SectionCheck out;
  out.coefficients = {checked_sub(k0m, checked_mul(l, r0m)), checked_sub(-k0p, checked_mul(l, r0p)),
                      checked_sub(checked_mul(l + 1, rinfp), kInfp)};
  out.exists = std::all_of(out.coefficients.begin(), out.coefficients.end(),
                           [&](std::int64_t c) { return floor_mod(c, lens.p()) == 0; });
  if (out.exists)
    for (auto c : out.coefficients) out.witness.push_back(c / lens.p());
  return out;
}

SectionCheck section_existence_check(const ModuliProblem& prob, std::int64_t l) {
  const std::int64_t p = prob.lens().p();
  SectionCheck out;
  for (const auto& rd : ramification_data(prob)) {
    const std::int64_t k = rd.end.orbit.multiplicity;
    const bool pos = rd.end.sign == Sign::Positive;
    std::int64_t c;
    if (rd.end.orbit.core == Core::Gamma0)
      c = pos ? checked_sub(-k, checked_mul(l, rd.r_bar)) : checked_sub(k, checked_mul(l, rd.r_bar));
    else
      c = pos ? checked_sub(checked_mul(l + 1, rd.r_bar), k) : checked_add(k, checked_mul(l + 1, rd.r_bar));
    out.coefficients.push_back(c);
  }
  out.exists = std::all_of(out.coefficients.begin(), out.coefficients.end(),
                           [&](std::int64_t c) { return floor_mod(c, p) == 0; });
  if (out.exists)
    for (auto c : out.coefficients) out.witness.push_back(c / p);
  return out;
}

std::int64_t canonical_section_twist(const LensSpace& lens) {
  require_standard(lens);
  return rep(inv(lens.v_residue() - lens.residue(1)));
}

bool laurent_exponent_allowed(const Residue& m, const Residue& target, std::int64_t n) {
  if (m.is_zero()) throw Error(ErrorKind::ZeroM, "deck rotation number m must be nonzero");
  return m * Residue(n, m.modulus()) == target;
}

}  // namespace lpq
