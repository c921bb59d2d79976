#include "lpq/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "lpq/error.hpp"

namespace lpq {

namespace {

Complex ipow(Complex z, int n) {
  if (n < 0) return Complex(1.0, 0.0) / ipow(z, -n);
  Complex acc(1.0, 0.0);
  while (n > 0) {
    if (n & 1) acc *= z;
    z *= z;
    n >>= 1;
  }
  return acc;
}

Complex unit(double turns) {
  const double angle = 2.0 * std::numbers::pi * turns;
  return {std::cos(angle), std::sin(angle)};
}

// mt19937_64 is fully specified by the standard; the double conversion is done by hand
// so samples agree across standard libraries.
double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

Complex sample_annulus(std::mt19937_64& gen, double inner, double outer) {
  const double radius = std::sqrt(inner * inner + (outer * outer - inner * inner) * uniform01(gen));
  return radius * unit(uniform01(gen));
}

std::vector<PowerFactor> as_power_factors(const std::vector<RootFactor>& roots, int p) {
  std::vector<PowerFactor> out;
  out.reserve(roots.size());
  for (const auto& f : roots) out.push_back({p, f.root, f.multiplicity});
  return out;
}

}  // namespace

MapValue FactoredRationalMap::operator()(Complex z) const {
  Complex num = lambda;
  Complex den(1.0, 0.0);
  if (r >= 0)
    num *= ipow(z, r);
  else
    den *= ipow(z, -r);
  for (const auto& f : numerator) num *= ipow(ipow(z, f.exponent) - f.root, f.multiplicity);
  for (const auto& f : denominator) den *= ipow(ipow(z, f.exponent) - f.root, f.multiplicity);
  if (den == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), true};
  return {num / den, false};
}

EquivariantRationalMap::EquivariantRationalMap(Complex lambda, int r, std::vector<RootFactor> zeros,
                                               std::vector<RootFactor> poles, std::int64_t p, std::int64_t q,
                                               std::int64_t m)
    : lambda_(lambda), r_(r), zeros_(std::move(zeros)), poles_(std::move(poles)), p_(p), q_(q), m_(m) {
  PrimeModulus mod(p);
  if (lambda_ == Complex(0.0, 0.0)) throw Error(ErrorKind::DegenerateFactors, "lambda must be nonzero");
  if (r_ == 0 || std::abs(r_) >= p) throw Error(ErrorKind::InvalidArgument, "need 0 < |r| < p");
  if (!(Residue(m, mod) * Residue(r, mod) == Residue(1 - q, mod)))
    throw Error(ErrorKind::CongruenceViolation,
                "m r = " + std::to_string(m * r) + " is not 1 - q mod " + std::to_string(p));
  std::vector<Complex> roots;
  for (const auto* list : {&zeros_, &poles_}) {
    for (const auto& f : *list) {
      if (f.multiplicity < 1) throw Error(ErrorKind::InvalidArgument, "factor multiplicity must be >= 1");
      if (f.root == Complex(0.0, 0.0)) throw Error(ErrorKind::DegenerateFactors, "factor root must be nonzero");
      if (std::find(roots.begin(), roots.end(), f.root) != roots.end())
        throw Error(ErrorKind::DegenerateFactors, "repeated or common factor root");
      roots.push_back(f.root);
    }
  }
}

FactoredRationalMap EquivariantRationalMap::factored() const {
  const int p = static_cast<int>(p_);
  return {lambda_, r_, as_power_factors(zeros_, p), as_power_factors(poles_, p)};
}

EquivariantRationalMap make_map(Complex lambda, int r, std::vector<RootFactor> zeros, std::vector<RootFactor> poles,
                                std::int64_t p, std::int64_t q, std::int64_t m) {
  return EquivariantRationalMap(lambda, r, std::move(zeros), std::move(poles), p, q, m);
}

std::int64_t degree(const EquivariantRationalMap& map) {
  const std::int64_t p = map.action().p;
  std::int64_t num = 0, den = 0;
  for (const auto& f : map.zeros()) num += p * f.multiplicity;
  for (const auto& f : map.poles()) den += p * f.multiplicity;
  (map.r() > 0 ? num : den) += std::abs(map.r());
  return std::max(num, den);
}

MapValue evaluate(const EquivariantRationalMap& map, Complex z) { return map.factored()(z); }

EquivarianceCheck check_equivariance(const FactoredRationalMap& map, const EquivariantAction& action,
                                     std::size_t sample_count, std::uint64_t seed, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  EquivarianceCheck out;
  out.samples = sample_count;
  if (sample_count == 0) {
    out.vacuous = true;
    return out;
  }
  const double p = static_cast<double>(action.p);
  const Complex domain_rot = unit(static_cast<double>(floor_mod(action.m, action.p)) / p);
  const Complex target_rot = unit(static_cast<double>(floor_mod(1 - action.q, action.p)) / p);
  std::mt19937_64 gen(seed);
  for (std::size_t i = 0; i < sample_count; ++i) {
    const Complex z = sample_annulus(gen, 0.5, 2.0);
    const MapValue base = map(z);
    const MapValue moved = map(domain_rot * z);
    double residual;
    if (base.infinite || moved.infinite)
      residual = base.infinite == moved.infinite ? 0.0 : std::numeric_limits<double>::infinity();
    else
      residual = std::abs(moved.value - target_rot * base.value) / (1.0 + std::abs(base.value));
    out.max_residual = std::max(out.max_residual, residual);
  }
  out.passed = out.max_residual <= tol;
  return out;
}

EquivarianceCheck check_equivariance(const EquivariantRationalMap& map, std::size_t sample_count,
                                     std::uint64_t seed, double tol) {
  return check_equivariance(map.factored(), map.action(), sample_count, seed, tol);
}

FactoredRationalMap perturb_zero_root(const EquivariantRationalMap& map, std::size_t zero_index, Complex w) {
  if (zero_index >= map.zeros().size()) throw Error(ErrorKind::InvalidArgument, "no such zero factor");
  FactoredRationalMap out = map.factored();
  PowerFactor& f = out.numerator[zero_index];
  f.multiplicity -= 1;
  out.numerator.push_back({1, w, 1});
  return out;
}

EquivariantRationalMap sample_component(const LensSpace& lens, const PantsComponent& comp, std::uint64_t seed) {
  require_standard(lens);
  const Residue r = lens.residue(comp.r);
  const std::int64_t m = ((lens.residue(1) - lens.q_residue()) * inv(r)).value();
  std::mt19937_64 gen(seed);
  const Complex lambda = sample_annulus(gen, 0.5, 2.0);
  std::vector<RootFactor> zeros;
  while (static_cast<std::int64_t>(zeros.size()) < comp.d_I) {
    const Complex a = sample_annulus(gen, 0.5, 2.0);
    const bool clash = std::any_of(zeros.begin(), zeros.end(), [&](const RootFactor& f) {
      return std::abs(f.root - a) < 1e-3;
    });
    if (!clash) zeros.push_back({a, 1});
  }
  return make_map(lambda, static_cast<int>(comp.r), std::move(zeros), {}, lens.p(), lens.q(), m);
}

}  // namespace lpq
