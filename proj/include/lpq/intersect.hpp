#pragma once

#include <cstdint>
#include <optional>

#include "lpq/arith.hpp"
#include "lpq/moduli.hpp"

namespace lpq {

/// Homology class m [S_0] + n [S_inf] in the fiberwise compactification of the
/// tautological bundle over CP^1. [S_0]^2 = -1, [S_inf]^2 = 1, [S_0].[S_inf] = 0.
struct BundleClass {
  std::int64_t m = 0;
  std::int64_t n = 0;

  static BundleClass zero_section() { return {1, 0}; }
  static BundleClass infinity_section() { return {0, 1}; }
  friend bool operator==(const BundleClass&, const BundleClass&) = default;
};

/// Total multiplicities of the positive and negative ends of a lifted curve in R x S^3.
struct LiftedMultiplicities {
  std::int64_t Kplus;
  std::int64_t Kminus;

  LiftedMultiplicities(std::int64_t plus, std::int64_t minus);
};

std::int64_t pairing(const BundleClass& a, const BundleClass& b);
BundleClass extended_class(const LiftedMultiplicities& K);
std::int64_t chern(const BundleClass& c);

/// 2 delta = K+^2 - K-^2 - 3K+ + K- + 2 - 2g for a simple curve of genus g.
/// Throws AdjunctionViolation (negative) or ParityViolation (odd).
std::int64_t adjunction_defect(const LiftedMultiplicities& K, std::int64_t genus);

bool action_monotone(const LiftedMultiplicities& K);

/// Non-contractible ends lift with their multiplicity, contractible ends lift p-fold.
LiftedMultiplicities lift_multiplicities(const ModuliProblem& prob);

struct ActionComparison {
  Rational action_plus;   // units of 2 pi
  Rational action_minus;  // units of 2 pi
  bool monotone = false;
  LiftedMultiplicities lift{1, 0};
  std::optional<std::int64_t> genus;              // genus of the branched lift, when it exists
  std::optional<std::int64_t> adjunction_defect;  // 2 delta, when realizable by a simple curve
};

ActionComparison total_action_comparison(const ModuliProblem& prob);

}  // namespace lpq
