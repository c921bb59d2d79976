#include <doctest.h>

#include <cmath>

#include "lpq/curves.hpp"
#include "lpq/error.hpp"
#include "oracles.hpp"

using namespace lpq;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

const Complex kOne(1.0, 0.0);

}  // namespace

TEST_SUITE("curves") {
  TEST_CASE("construction and validation") {
    const auto map = make_map(kOne, 1, {}, {}, 5, 2, 4);
    CHECK(map.action().m == 4);
    CHECK(kind_of([] { make_map(kOne, 1, {}, {}, 5, 2, 2); }) == ErrorKind::CongruenceViolation);
    CHECK(kind_of([] { make_map(kOne, 1, {{kOne, 1}}, {{kOne, 1}}, 5, 2, 4); }) == ErrorKind::DegenerateFactors);
    CHECK(kind_of([] { make_map(kOne, 1, {{kOne, 1}, {kOne, 2}}, {}, 5, 2, 4); }) == ErrorKind::DegenerateFactors);
    CHECK(kind_of([] { make_map(kOne, 1, {{Complex(0.0, 0.0), 1}}, {}, 5, 2, 4); }) ==
          ErrorKind::DegenerateFactors);
    CHECK(kind_of([] { make_map(Complex(0.0, 0.0), 1, {}, {}, 5, 2, 4); }) == ErrorKind::DegenerateFactors);
    CHECK(kind_of([] { make_map(kOne, 5, {}, {}, 5, 2, 4); }) == ErrorKind::InvalidArgument);
    // negative r is accepted: m r = 1 - q with r = -1 gives m = q - 1
    CHECK(make_map(kOne, -1, {}, {}, 5, 2, 1).r() == -1);
  }

  TEST_CASE("degree") {
    CHECK(degree(make_map(kOne, 1, {}, {}, 5, 2, 4)) == 1);
    CHECK(degree(make_map(kOne, 1, {{Complex(0.7, 0.2), 1}}, {}, 5, 2, 4)) == 6);
    CHECK(degree(make_map(kOne, 3, {}, {}, 5, 2, 3)) == 3);
    CHECK(degree(make_map(kOne, 1, {{Complex(0.7, 0.2), 2}}, {{Complex(1.1, 0.0), 1}}, 5, 2, 4)) == 11);
  }

  TEST_CASE("evaluation") {
    const auto id = make_map(kOne, 1, {}, {}, 5, 2, 4);
    CHECK(evaluate(id, Complex(2.0, 0.0)).value == Complex(2.0, 0.0));
    CHECK(std::abs(evaluate(id, Complex(0.0, 0.0)).value) == 0.0);
    const auto hit = make_map(Complex(2.0, 0.0), 1, {{kOne, 1}}, {}, 5, 2, 4);
    CHECK(std::abs(evaluate(hit, kOne).value) == 0.0);
    const auto pole = make_map(kOne, 1, {}, {{kOne, 1}}, 5, 2, 4);
    CHECK(evaluate(pole, kOne).infinite);
  }

  TEST_CASE("equivariance of valid and perturbed maps") {
    const auto map = make_map(kOne, 1, {}, {}, 5, 2, 4);
    const auto ok = check_equivariance(map, 1000, 1, 1e-9);
    CHECK(ok.passed);
    CHECK(ok.samples == 1000);
    CHECK_FALSE(ok.vacuous);

    const auto with_zero = make_map(Complex(1.3, -0.4), 2, {{Complex(0.8, 0.5), 2}}, {{Complex(-1.2, 0.3), 1}}, 7, 3, 6);
    CHECK(check_equivariance(with_zero, 1000, 9, 1e-9).passed);
    const auto broken = perturb_zero_root(with_zero, 0, Complex(0.3, 0.9));
    const auto bad = check_equivariance(broken, with_zero.action(), 1000, 9, 1e-9);
    CHECK_FALSE(bad.passed);
    CHECK(bad.max_residual > 1e-6);

    const auto none = check_equivariance(map, 0, 1, 1e-9);
    CHECK(none.passed);
    CHECK(none.vacuous);
    CHECK_THROWS_AS(check_equivariance(map, 10, 1, 0.0), Error);
    CHECK_THROWS_AS(perturb_zero_root(map, 0, kOne), Error);
  }

  TEST_CASE("sampling is seeded and reproducible") {
    const LensSpace L = make_lens(5, 2);
    const PantsComponent minimal{1, 0, 1, 2, 4, 4};
    const auto a = sample_component(L, minimal, 42);
    CHECK(degree(a) == 1);
    CHECK(a.zeros().empty());
    const auto b = sample_component(L, minimal, 42);
    CHECK(a.lambda() == b.lambda());
    const auto c = sample_component(L, minimal, 43);
    CHECK(a.lambda() != c.lambda());
    CHECK(a.r() == c.r());
    CHECK(a.action().m == c.action().m);
    const auto d = sample_component(L, PantsComponent{1, 1, 1, 2, 9, 8}, 42);
    CHECK(degree(d) == 6);
    CHECK(d.zeros().size() == 1);
    // r = 2 in L(5,2): m = (1-2) inv(2) = 2
    CHECK(sample_component(L, PantsComponent{2, 0, 1, 4, 3, 4}, 7).action().m == 2);
  }

  TEST_CASE("property: sampled maps are equivariant, have the right degree and break under perturbation") {
    std::uint64_t seed = 1000;
    for (std::int64_t p : oracle::primes_in(5, 13))
      for (std::int64_t q = 2; q < p - 1; ++q) {
        const LensSpace L = make_lens(p, q);
        for (std::int64_t r = 1; r < p; r += 2)
          for (std::int64_t dI = 0; dI <= 2; ++dI) {
            const auto map = sample_component(L, PantsComponent{r, dI, 1, 0, 0, 4 + 4 * dI}, ++seed);
            REQUIRE(degree(map) == r + p * dI);
            REQUIRE(oracle::mod(map.action().m * r, p) == oracle::mod(1 - q, p));
            const auto chk = check_equivariance(map, 1000, seed, 1e-9);
            REQUIRE(chk.passed);
            if (dI > 0) {
              const auto bad = check_equivariance(perturb_zero_root(map, 0, Complex(0.9, -0.6)), map.action(), 1000,
                                                  seed, 1e-9);
              CHECK(bad.max_residual > 1e3 * 1e-9);
            }
            // c(z) / z^r tends to lambda g(0) / h(0)
            const Complex z(1e-6, 0.0);
            Complex limit = map.lambda();
            for (const auto& f : map.zeros()) limit *= std::pow(-f.root, f.multiplicity);
            const Complex ratio = evaluate(map, z).value / std::pow(z, static_cast<int>(r));
            CHECK(std::abs(ratio - limit) <= 1e-6 * std::abs(limit));
          }
      }
  }
}
