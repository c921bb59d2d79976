#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lpq/lens.hpp"
#include "lpq/moduli.hpp"

namespace lpq {

using Complex = std::complex<double>;

/// A factor (z^exponent - root)^multiplicity.
struct PowerFactor {
  int exponent;
  Complex root;
  int multiplicity;
};

/// Point of CP^1: a finite value or infinity.
struct MapValue {
  Complex value;
  bool infinite = false;
};

/// lambda * z^r * prod(numerator) / prod(denominator), evaluated in double precision.
struct FactoredRationalMap {
  Complex lambda{1.0, 0.0};
  int r = 0;
  std::vector<PowerFactor> numerator;
  std::vector<PowerFactor> denominator;

  MapValue operator()(Complex z) const;
};

/// Z_p action data: the domain rotates by exp(i m theta), the target by exp(i (1-q) theta).
struct EquivariantAction {
  std::int64_t p;
  std::int64_t q;
  std::int64_t m;
};

struct RootFactor {
  Complex root;
  int multiplicity;
};

/// Base curve c(z) = lambda z^r g(z)/h(z), g and h products of (z^p - a)^k, with m r = 1 - q mod p.
class EquivariantRationalMap {
public:
  EquivariantRationalMap(Complex lambda, int r, std::vector<RootFactor> zeros, std::vector<RootFactor> poles,
                         std::int64_t p, std::int64_t q, std::int64_t m);

  Complex lambda() const noexcept { return lambda_; }
  int r() const noexcept { return r_; }
  const std::vector<RootFactor>& zeros() const noexcept { return zeros_; }
  const std::vector<RootFactor>& poles() const noexcept { return poles_; }
  EquivariantAction action() const noexcept { return {p_, q_, m_}; }
  FactoredRationalMap factored() const;

private:
  Complex lambda_;
  int r_;
  std::vector<RootFactor> zeros_;
  std::vector<RootFactor> poles_;
  std::int64_t p_, q_, m_;
};

/// Throws CongruenceViolation or DegenerateFactors.
EquivariantRationalMap make_map(Complex lambda, int r, std::vector<RootFactor> zeros, std::vector<RootFactor> poles,
                                std::int64_t p, std::int64_t q, std::int64_t m);

std::int64_t degree(const EquivariantRationalMap& map);
MapValue evaluate(const EquivariantRationalMap& map, Complex z);

struct EquivarianceCheck {
  bool passed = true;
  double max_residual = 0.0;
  std::size_t samples = 0;
  bool vacuous = false;
};

/// Samples z on the annulus 0.5 <= |z| <= 2 and checks
/// |c(e^{i m theta} z) - e^{i(1-q) theta} c(z)| <= tol (1 + |c(z)|).
EquivarianceCheck check_equivariance(const FactoredRationalMap& map, const EquivariantAction& action,
                                     std::size_t sample_count, std::uint64_t seed, double tol);
EquivarianceCheck check_equivariance(const EquivariantRationalMap& map, std::size_t sample_count,
                                     std::uint64_t seed, double tol);

/// Replaces one p-th-power zero factor (z^p - a)^k by (z^p - a)^{k-1} (z - w).
FactoredRationalMap perturb_zero_root(const EquivariantRationalMap& map, std::size_t zero_index, Complex w);

/// A base curve in the given pants component: m = (1-q) r^{-1}, random lambda and d_I distinct roots.
EquivariantRationalMap sample_component(const LensSpace& lens, const PantsComponent& comp, std::uint64_t seed);

}  // namespace lpq
