#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lpq/arith.hpp"
#include "lpq/lens.hpp"

namespace lpq {

/// Total actions (units of 2 pi) at the positive and negative ends of the middle-level pants.
struct ActionProfile {
  Rational plus;
  Rational minus;

  friend bool operator==(const ActionProfile&, const ActionProfile&) = default;
};

enum class CaseReason {
  SurvivesMainCase,
  NegativeEndNotContractible,
  TrivialCylinderMissesPoint,
  IndexContradiction,
};

enum class StretchContext { Cobordism, NeckStretch };
enum class EndAssignment { Straight, Swapped };

std::string_view to_string(CaseReason reason);
std::string_view to_string(StretchContext context);
std::string_view to_string(EndAssignment assignment);

struct CaseVerdict {
  ActionProfile profile;
  bool eliminated = false;
  CaseReason reason = CaseReason::SurvivesMainCase;
};

/// (1+1/p, 1), (1+1/p, 1+1/p), (1, 1) in that order.
std::vector<ActionProfile> enumerate_profiles(std::int64_t p);

std::vector<CaseVerdict> eliminate_cases(const LensSpace& lens, StretchContext context);

struct CongruenceReport {
  EndAssignment assignment;
  std::int64_t k0 = 0, kInf = 0;  // multiplicities of the minimal pants in L(p,q), in {1..p}
  std::int64_t l0 = 0, lInf = 0;  // multiplicities forced in L(p,q') by the assignment
  bool cylinders_monotone = false;  // k0 >= l0 and kInf >= lInf
  bool consistent = false;          // l0 = k0 and lInf = kInf
  bool relation_holds = false;      // q' = q (straight) or q' = q^{-1} (swapped)
};

CongruenceReport derive_congruence(const LensSpace& lens, const LensSpace& other, EndAssignment assignment);

/// True iff some assignment is consistent; equals q' = q^{+-1} mod p.
bool verify_theorem(std::int64_t p, std::int64_t q, std::int64_t q2);

}  // namespace lpq
