#include "lpq/lens.hpp"

#include <string>

#include "lpq/error.hpp"

namespace lpq {

namespace {

void require_same_p(const LensSpace& a, const LensSpace& b) {
  if (a.p() != b.p())
    throw Error(ErrorKind::ModulusMismatch,
                "L(" + std::to_string(a.p()) + ",.) vs L(" + std::to_string(b.p()) + ",.)");
}

template <typename Related>
std::vector<std::vector<std::int64_t>> partition(std::int64_t p, Related related) {
  std::vector<std::vector<std::int64_t>> classes;
  for (std::int64_t q = 1; q < p; ++q) {
    bool placed = false;
    for (auto& cls : classes) {
      if (related(cls.front(), q)) {
        cls.push_back(q);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({q});
  }
  return classes;
}

}  // namespace

LensSpace::LensSpace(PrimeModulus p, Residue q)
    : p_(p), q_(q), v_(inv(q)), standard_range_(q.value() != 1 && q.value() != p.value() - 1) {}

LensSpace make_lens(std::int64_t p, std::int64_t q) {
  PrimeModulus mod(p);
  if (q <= 0 || q >= p)
    throw Error(ErrorKind::QOutOfRange, "q=" + std::to_string(q) + " must satisfy 0 < q < " + std::to_string(p));
  return LensSpace(mod, Residue(q, mod));
}

void require_standard(const LensSpace& lens) {
  if (!lens.standard_range())
    throw Error(ErrorKind::NotStandardRange,
                "L(" + std::to_string(lens.p()) + "," + std::to_string(lens.q()) + ") needs 1 < q < p-1");
}

Residue euler_class_pd(const LensSpace& lens) { return lens.residue(lens.q() + 1); }

bool homotopy_equivalent(const LensSpace& a, const LensSpace& b) {
  require_same_p(a, b);
  Residue prod = a.q_residue() * b.q_residue();
  return is_quadratic_residue(prod) || is_quadratic_residue(-prod);
}

bool diffeomorphic(const LensSpace& a, const LensSpace& b) {
  require_same_p(a, b);
  const Residue q = a.q_residue();
  const Residue q2 = b.q_residue();
  const Residue q2inv = inv(q2);
  return q == q2 || q == -q2 || q == q2inv || q == -q2inv;
}

bool positive_contactomorphism_possible(const LensSpace& a, const LensSpace& b) {
  require_same_p(a, b);
  require_standard(a);
  require_standard(b);
  return a.q_residue() == b.q_residue() || a.q_residue() == inv(b.q_residue());
}

ClassReport enumerate_classes(std::int64_t p) {
  PrimeModulus mod(p);
  ClassReport report;
  report.p = p;
  auto lens = [&](std::int64_t q) { return LensSpace(mod, Residue(q, mod)); };
  report.diffeomorphism_classes =
      partition(p, [&](std::int64_t a, std::int64_t b) { return diffeomorphic(lens(a), lens(b)); });
  report.homotopy_classes =
      partition(p, [&](std::int64_t a, std::int64_t b) { return homotopy_equivalent(lens(a), lens(b)); });
  for (std::int64_t a = 1; a < p; ++a)
    for (std::int64_t b = a + 1; b < p; ++b)
      if (homotopy_equivalent(lens(a), lens(b)) && !diffeomorphic(lens(a), lens(b)))
        report.exotic_pairs.emplace_back(a, b);
  return report;
}

}  // namespace lpq
