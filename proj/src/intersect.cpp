#include "lpq/intersect.hpp"

#include <string>

#include "lpq/error.hpp"

namespace lpq {

LiftedMultiplicities::LiftedMultiplicities(std::int64_t plus, std::int64_t minus) : Kplus(plus), Kminus(minus) {
  if (plus < 1) throw Error(ErrorKind::InvalidArgument, "a curve without positive ends cannot exist (K+ >= 1)");
  if (minus < 0) throw Error(ErrorKind::InvalidArgument, "K- must be >= 0");
}

std::int64_t pairing(const BundleClass& a, const BundleClass& b) {
  return checked_add(-checked_mul(a.m, b.m), checked_mul(a.n, b.n));
}

BundleClass extended_class(const LiftedMultiplicities& K) { return {-K.Kminus, K.Kplus}; }

std::int64_t chern(const BundleClass& c) {
  // c1[S_0] = -1 + 2 = 1, c1[S_inf] = 1 + 2 = 3
  return checked_add(c.m, checked_mul(3, c.n));
}

std::int64_t adjunction_defect(const LiftedMultiplicities& K, std::int64_t genus) {
  if (genus < 0) throw Error(ErrorKind::InvalidArgument, "genus must be >= 0");
  const BundleClass cls = extended_class(K);
  // [u].[u] - c1([u]) + chi = 2 delta
  const std::int64_t two_delta =
      checked_add(checked_sub(pairing(cls, cls), chern(cls)), checked_sub(2, checked_mul(2, genus)));
  if (two_delta < 0)
    throw Error(ErrorKind::AdjunctionViolation,
                "2 delta = " + std::to_string(two_delta) + " < 0; not realizable by a simple curve");
  if (two_delta % 2 != 0) throw Error(ErrorKind::ParityViolation, "2 delta = " + std::to_string(two_delta) + " is odd");
  return two_delta;
}

bool action_monotone(const LiftedMultiplicities& K) { return K.Kplus >= K.Kminus; }

LiftedMultiplicities lift_multiplicities(const ModuliProblem& prob) {
  const std::int64_t p = prob.lens().p();
  std::int64_t plus = 0, minus = 0;
  for (const auto& e : prob.ends()) {
    const std::int64_t weight = e.contractible() ? checked_mul(p, e.orbit.multiplicity) : e.orbit.multiplicity;
    if (e.sign == Sign::Positive)
      plus = checked_add(plus, weight);
    else
      minus = checked_add(minus, weight);
  }
  return {plus, minus};
}

ActionComparison total_action_comparison(const ModuliProblem& prob) {
  ActionComparison out;
  out.lift = lift_multiplicities(prob);
  const std::int64_t p = prob.lens().p();
  out.action_plus = Rational(out.lift.Kplus, p);
  out.action_minus = Rational(out.lift.Kminus, p);
  out.monotone = action_monotone(out.lift);
  const int n_nc = prob.counts().n_nc();
  // with fewer than two branch points the lift is not a single branched cover
  if (n_nc >= 2) out.genus = genus_of_lift(prob);
  if (out.genus) {
    try {
      out.adjunction_defect = adjunction_defect(out.lift, *out.genus);
    } catch (const Error&) {
      // unrealizable by a simple curve: leave the defect empty
    }
  }
  return out;
}

}  // namespace lpq
