#include "doctest.h"

#include <cmath>

#include "orbistat/counting.hpp"
#include "orbistat/errors.hpp"
#include "orbistat/registry.hpp"
#include "oracles.hpp"

using namespace orbistat;
using count::PairCountSpec;
using frob::FrobenianSet;
using poly::IntPoly;

TEST_CASE("c_S products") {
  CHECK(count::c_s_exact({}, 1) == 1);
  CHECK(count::c_s_exact({2}, 1) == Rat(1, 2));
  CHECK(count::c_s_exact({2}, 2) == Rat(3, 4));
  CHECK(count::c_s_exact({2, 3}, 1) == Rat(1, 3));
  CHECK(count::c_s_real({2}, 2.0) == doctest::Approx(3.0 / 4.0));
  CHECK_THROWS_AS(count::c_s_exact({4}, 1), validation_error);
  CHECK_THROWS_AS(count::c_s_exact({2}, 0), validation_error);
}

TEST_CASE("structured enumeration equals the blind oracle") {
  poly::PrimeTable table(400);
  for (const auto& pc : oracle::pair_corpus()) {
    for (std::int64_t B : {1, 7, 50, 300}) {
      auto got = count::count_frobenian_pairs(pc.spec, B, table);
      CAPTURE(pc.name);
      CAPTURE(B);
      CHECK(got.pairs == oracle::blind_pair_count(pc.spec, B));
      CHECK(got.axis == 4);
    }
  }
}

TEST_CASE("frozen pair counts at height 100") {
  poly::PrimeTable table(200);
  std::vector<std::int64_t> expected{24348, 2240, 2240, 2492,
                                     1472,  1068, 124,  4712};
  auto corpus = oracle::pair_corpus();
  REQUIRE(corpus.size() == expected.size());
  for (std::size_t i = 0; i < corpus.size(); ++i)
    CHECK(count::count_frobenian_pairs(corpus[i].spec, 100, table).pairs ==
          expected[i]);
}

TEST_CASE("swapping the sides leaves the count unchanged") {
  poly::PrimeTable table(3000);
  for (const auto& pc : oracle::pair_corpus()) {
    PairCountSpec sw;
    sw.m0 = pc.spec.m1;
    sw.m1 = pc.spec.m0;
    sw.P0 = pc.spec.P1;
    sw.P1 = pc.spec.P0;
    sw.S = pc.spec.S;
    sw.density0 = pc.spec.density1;
    sw.density1 = pc.spec.density0;
    CHECK(count::count_frobenian_pairs(pc.spec, 3000, table).pairs ==
          count::count_frobenian_pairs(sw, 3000, table).pairs);
  }
}

TEST_CASE("counts never decrease in the height") {
  poly::PrimeTable table(600);
  for (const auto& pc : oracle::pair_corpus()) {
    std::int64_t prev = 0;
    for (std::int64_t B = 1; B <= 600; B += 7) {
      auto got = count::count_frobenian_pairs(pc.spec, B, table).pairs;
      CHECK(got >= prev);
      prev = got;
    }
  }
}

TEST_CASE("spec validation") {
  PairCountSpec bad;
  bad.m0 = 0;
  CHECK_THROWS_AS(bad.validate(), validation_error);
  PairCountSpec bad_s;
  bad_s.S = {6};
  CHECK_THROWS_AS(bad_s.validate(), validation_error);
  PairCountSpec bad_d;
  bad_d.density0 = 2;
  CHECK_THROWS_AS(bad_d.validate(), validation_error);
  poly::PrimeTable small(10);
  PairCountSpec ok;
  CHECK_THROWS_AS(count::count_frobenian_pairs(ok, 100, small), resource_error);
}

TEST_CASE("multiplicative support counts") {
  poly::PrimeTable table(2000);
  FrobenianSet gauss = FrobenianSet::has_root(IntPoly::from_i64({1, 0, 1}));
  CHECK(count::count_mult_support(gauss, {2}, 2000, table) ==
        oracle::mult_support_brute(gauss, {2}, 2000));
  CHECK(count::count_mult_support(FrobenianSet::all_primes(), {}, 2000,
                                  table) == 2000);
  FrobenianSet c3 = FrobenianSet::splits_completely(
      IntPoly::from_i64({-1, -3, 0, 1}));
  CHECK(count::count_mult_support(c3, {3}, 2000, table) ==
        oracle::mult_support_brute(c3, {3}, 2000));
}

TEST_CASE("support main term tracks the count") {
  poly::PrimeTable table(1000000);
  FrobenianSet gauss = FrobenianSet::has_root(IntPoly::from_i64({1, 0, 1}));
  std::int64_t got = count::count_mult_support(gauss, {2}, 1000000, table);
  double main =
      count::mult_support_main(gauss, {2}, 0.5, 1000000, 1000000, table);
  CHECK(std::abs(static_cast<double>(got) / main - 1.0) < 0.15);
}

TEST_CASE("kappa warns about excluded primes outside s") {
  poly::PrimeTable table(1000);
  FrobenianSet P =
      FrobenianSet::has_root(IntPoly::from_i64({1, 0, 1})).with_excluded({7});
  std::vector<std::int64_t> warned;
  count::kappa_truncated(P, {2}, 0.5, 1000, table, &warned);
  CHECK(warned == std::vector<std::int64_t>{7});
}

TEST_CASE("asymptotic constant of the unrestricted problem") {
  poly::PrimeTable table(2000000);
  PairCountSpec base;
  auto c = count::asymptotic_constant(base, 2000000, table);
  // 4 / zeta(2)
  CHECK(std::abs(c.value - 24.0 / (M_PI * M_PI)) < 1e-3);
  CHECK(std::abs(c.value - c.value_half) < 1e-4);
  CHECK(c.warned.empty());
  CHECK(count::pair_count_main(base, c.value, 1000.0) ==
        doctest::Approx(c.value * 1e6));
}

TEST_CASE("flagship constant is stable under the cutoff") {
  poly::PrimeTable table(2000000);
  auto corpus = oracle::pair_corpus();
  const PairCountSpec& flag = corpus[1].spec;
  auto c = count::asymptotic_constant(flag, 2000000, table);
  // closed form: (4 sqrt(2) / Gamma(1/2)) * 4.41421356 * 2^(-3/2) *
  // sqrt(L(1,chi_4) prod_{p=3(4)}(1-1/p^2)) * prod_{p=1(4)}(1-1/p^2)
  CHECK(c.value == doctest::Approx(3.86704).epsilon(0.001));
  CHECK(std::abs(c.value - c.value_half) / c.value < 0.01);
  // B^(1/2 + 1) with a half-integral log power
  double main = count::pair_count_main(flag, c.value, 10000.0);
  CHECK(main == doctest::Approx(c.value * std::pow(10000.0, 1.5) /
                                std::sqrt(std::log(10000.0))));
}

TEST_CASE("nloc of the one-double-fibre model splits into pairs") {
  poly::PrimeTable table(2000);
  const auto& df = registry::lookup("double-fibre");
  for (std::int64_t B : {50, 200, 500}) {
    auto nl = count::count_nloc_example(df.descriptor, B, df.default_mode,
                                        table);
    auto pr = count::count_frobenian_pairs(*df.pair_model, B, table);
    CHECK(nl.points == pr.pairs / 2 + 1);
    CHECK(nl.on_divisor == 1);
  }
}

TEST_CASE("a split fibre imposes no condition") {
  poly::PrimeTable table(500);
  orb::FibrationDescriptor d;
  d.name = "split-only";
  orb::ClosedPointFibre f;
  f.form = poly::BinaryForm::from_i64({0, 1});
  f.components.push_back({"S", 1, IntPoly::from_i64({0, 1})});
  f.min_mult_field = IntPoly::from_i64({0, 1});
  f.split = true;
  d.points = {f};
  d.validate_and_fold();
  for (std::int64_t B : {20, 100}) {
    auto nl = count::count_nloc_example(d, B, sol::Mode::sufficient, table);
    // every point accepted except the one on the fibre
    CHECK(nl.points == oracle::p1_points(B) - 1);
    CHECK(nl.on_divisor == 1);
  }
}

TEST_CASE("beta-type sieve count equals the scan") {
  poly::PrimeTable table(10001);
  IntPoly gauss = IntPoly::from_i64({1, 0, 1});
  for (std::int64_t X : {10, 50, 100}) {
    CHECK(count::count_beta_sieve_pairs(gauss, X, table) ==
          oracle::beta_brute({1, 0, 1}, X));
  }
  CHECK(count::count_beta_sieve_pairs(gauss, 10, table) == 9);
  CHECK(count::count_beta_sieve_pairs(gauss, 100, table) == 171);
  CHECK_THROWS_AS(count::count_beta_sieve_pairs(gauss, 1, table),
                  validation_error);
  CHECK_THROWS_AS(count::count_beta_sieve_pairs(gauss, 500, table),
                  resource_error);
  CHECK_THROWS_AS(
      count::count_beta_sieve_pairs(IntPoly::from_i64({0, 1}), 10, table),
      validation_error);
}

TEST_CASE("quadratic-point growth sits between the pure powers") {
  poly::PrimeTable table(250001);
  IntPoly gauss = IntPoly::from_i64({1, 0, 1});
  std::int64_t n250 = count::count_beta_sieve_pairs(gauss, 250, table);
  std::int64_t n500 = count::count_beta_sieve_pairs(gauss, 500, table);
  double r = std::log2(static_cast<double>(n500) / n250);
  CHECK(r > 1.0);
  CHECK(r < 2.0);
}
