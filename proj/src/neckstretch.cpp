#include "lpq/neckstretch.hpp"

#include <string>
#include <tuple>

#include "lpq/error.hpp"
#include "lpq/intersect.hpp"

namespace lpq {

namespace {

// The unique representative in {1..p} of a nonzero residue, paired with p+1 minus it.
std::pair<std::int64_t, std::int64_t> pin_pair(const Residue& first) {
  const std::int64_t a = first.positive_rep();
  return {a, first.modulus().value() + 1 - a};
}

}  // namespace

std::string_view to_string(CaseReason reason) {
  switch (reason) {
    case CaseReason::SurvivesMainCase: return "SurvivesMainCase";
    case CaseReason::NegativeEndNotContractible: return "NegativeEndNotContractible";
    case CaseReason::TrivialCylinderMissesPoint: return "TrivialCylinderMissesPoint";
    case CaseReason::IndexContradiction: return "IndexContradiction";
  }
  return "?";
}

std::string_view to_string(StretchContext context) {
  return context == StretchContext::Cobordism ? "cobordism" : "neckstretch";
}

std::string_view to_string(EndAssignment assignment) {
  return assignment == EndAssignment::Straight ? "straight" : "swapped";
}

std::vector<ActionProfile> enumerate_profiles(std::int64_t p) {
  PrimeModulus mod(p);
  if (p < 5) throw Error(ErrorKind::InvalidArgument, "need p >= 5");
  const Rational top = Rational(1) + Rational(1, p);
  return {{top, Rational(1)}, {top, top}, {Rational(1), Rational(1)}};
}

std::vector<CaseVerdict> eliminate_cases(const LensSpace& lens, StretchContext context) {
  require_standard(lens);
  const std::int64_t p = lens.p();
  const Residue one = lens.residue(1);
  const std::int64_t k0 = inv(one - lens.v_residue()).positive_rep();
  const std::int64_t kInf = inv(one - lens.q_residue()).positive_rep();

  std::vector<CaseVerdict> out;
  for (const auto& profile : enumerate_profiles(p)) {
    CaseVerdict verdict{profile, false, CaseReason::SurvivesMainCase};
    if (profile.plus != profile.minus) {
      out.push_back(verdict);
      continue;
    }
    verdict.eliminated = true;
    if (!profile.minus.is_integer()) {
      // a contractible orbit has action 2 pi k, never 2 pi (1 + 1/p)
      verdict.reason = CaseReason::NegativeEndNotContractible;
    } else if (context == StretchContext::NeckStretch) {
      // zero d alpha-energy: the curve is a p-fold cover of a trivial cylinder, which cannot
      // pass through the marked point
      verdict.reason = CaseReason::TrivialCylinderMissesPoint;
    } else {
      // a p-fold cover with both positive ends fully ramified needs p | (k0 - 1) and p | kInf
      // (or the mirrored pair), impossible since k0 + kInf = p + 1
      const bool straight = (k0 - 1) % p == 0 && kInf % p == 0;
      const bool mirrored = k0 % p == 0 && (kInf - 1) % p == 0;
      if (straight || mirrored) throw Error(ErrorKind::InvalidArgument, "covering obstruction does not apply");
      verdict.reason = CaseReason::IndexContradiction;
    }
    out.push_back(verdict);
  }
  return out;
}

CongruenceReport derive_congruence(const LensSpace& lens, const LensSpace& other, EndAssignment assignment) {
  if (lens.p() != other.p()) throw Error(ErrorKind::ModulusMismatch, "lens spaces with different p");
  require_standard(lens);
  require_standard(other);
  const Residue one = lens.residue(1);

  CongruenceReport out;
  out.assignment = assignment;
  std::tie(out.k0, out.kInf) = pin_pair(inv(one - lens.v_residue()));

  // positive end of u_0 at 0 is l0 * gamma_0' (straight) or l0 * gamma_infty' (swapped)
  const Residue l0_class = assignment == EndAssignment::Straight ? inv(one - other.v_residue())
                                                                 : inv(one - other.q_residue());
  const Residue lInf_class = assignment == EndAssignment::Straight ? inv(one - other.q_residue())
                                                                   : inv(one - other.v_residue());
  std::tie(out.l0, out.lInf) = pin_pair(l0_class);
  if (!(lens.residue(out.lInf) == lInf_class))
    throw Error(ErrorKind::InvalidArgument, "multiplicities do not sum to p + 1");

  // cylinders C1: k0 gamma_0 -> l0 and C2: kInf gamma_infty -> lInf must not increase action
  out.cylinders_monotone = action_monotone(LiftedMultiplicities(out.k0, out.l0)) &&
                           action_monotone(LiftedMultiplicities(out.kInf, out.lInf));
  out.consistent = out.cylinders_monotone && out.l0 == out.k0 && out.lInf == out.kInf;
  const Residue q = lens.q_residue();
  const Residue q2 = other.q_residue();
  out.relation_holds = assignment == EndAssignment::Straight ? q2 == q : q2 == inv(q);
  return out;
}

bool verify_theorem(std::int64_t p, std::int64_t q, std::int64_t q2) {
  const LensSpace a = make_lens(p, q);
  const LensSpace b = make_lens(p, q2);
  bool any = false;
  for (auto assignment : {EndAssignment::Straight, EndAssignment::Swapped}) {
    const CongruenceReport rep = derive_congruence(a, b, assignment);
    if (rep.consistent && !rep.relation_holds)
      throw Error(ErrorKind::InvalidArgument, "consistent assignment without the forced congruence");
    any = any || rep.consistent;
  }
  return any;
}

}  // namespace lpq
