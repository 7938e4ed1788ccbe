#include "doctest.h"

#include <cmath>

#include "orbistat/errors.hpp"
#include "orbistat/frobenian.hpp"
#include "orbistat/prime_table.hpp"
#include "oracles.hpp"

using namespace orbistat;
using frob::FrobenianSet;
using poly::IntPoly;

namespace {
const IntPoly gauss = IntPoly::from_i64({1, 0, 1});
const IntPoly cyc = IntPoly::from_i64({-1, -3, 0, 1});
const IntPoly pure = IntPoly::from_i64({-2, 0, 0, 1});
}  // namespace

TEST_CASE("excluded sets carry the ramified primes") {
  CHECK(frob::ramified_primes(gauss) == std::vector<std::int64_t>{2});
  CHECK(frob::ramified_primes(pure) == std::vector<std::int64_t>{2, 3});
  CHECK(frob::ramified_primes(cyc) == std::vector<std::int64_t>{3});
  CHECK(frob::ramified_primes(IntPoly::from_i64({1, 0, 10}))  // lc divisible
            == std::vector<std::int64_t>{2, 5});

  FrobenianSet P = FrobenianSet::has_root(gauss);
  CHECK(P.is_excluded(2));
  CHECK_THROWS_AS(P.contains(2), validation_error);
  CHECK(P.with_excluded({7}).is_excluded(7));
  CHECK_FALSE(P.is_excluded(7));
}

TEST_CASE("membership of every kind against the residue scan") {
  poly::PrimeTable table(500);
  std::vector<FrobenianSet> sets = {
      FrobenianSet::all_primes(),
      FrobenianSet::has_root(gauss),
      FrobenianSet::has_root(cyc),
      FrobenianSet::root_count(pure, 1),
      FrobenianSet::splits_completely(cyc),
      FrobenianSet::splits_completely(IntPoly::from_i64({1, 0, 0, 0, 1})),
      FrobenianSet::complement(FrobenianSet::has_root(gauss)),
      FrobenianSet::intersection(
          {FrobenianSet::has_root(gauss), FrobenianSet::has_root(pure)}),
  };
  for (const FrobenianSet& P : sets)
    for (std::int64_t p : table.primes()) {
      if (P.is_excluded(p)) continue;
      CHECK(P.contains(p) == oracle::member_brute(P, p));
    }
}

TEST_CASE("splitting patterns at named primes") {
  FrobenianSet split_gauss = FrobenianSet::has_root(gauss);
  CHECK(split_gauss.contains(5));
  CHECK(split_gauss.contains(13));
  CHECK_FALSE(split_gauss.contains(7));

  // a cubic with group s3 has a root at density 2/3 of primes
  FrobenianSet root_pure = FrobenianSet::has_root(pure);
  CHECK(root_pure.contains(5));    // 3^3 = 27 = 2 mod 5
  CHECK_FALSE(root_pure.contains(7));

  FrobenianSet c3 = FrobenianSet::splits_completely(cyc);
  CHECK(c3.contains(17));   // 17 = 1 mod 9... split prime of the cyclic cubic
  CHECK_FALSE(c3.contains(5));
}

TEST_CASE("empirical densities approach the chebotarev values") {
  poly::PrimeTable table(200000);
  auto near = [&](const FrobenianSet& P, double target) {
    auto d = frob::density_empirical(P, 200000, table);
    CHECK(d.total > 0);
    CHECK(std::abs(d.value - target) < 0.02);
  };
  near(FrobenianSet::has_root(gauss), 0.5);
  near(FrobenianSet::has_root(pure), 2.0 / 3.0);
  near(FrobenianSet::splits_completely(pure), 1.0 / 6.0);
  near(FrobenianSet::has_root(cyc), 1.0 / 3.0);
  near(FrobenianSet::root_count(IntPoly::from_i64({1, 0, 0, 0, 1}), 0), 0.75);
  near(FrobenianSet::all_primes(), 1.0);
}

TEST_CASE("density scan is deterministic and additive") {
  poly::PrimeTable table(50000);
  auto a = frob::density_empirical(FrobenianSet::has_root(gauss), 50000, table);
  auto b = frob::density_empirical(FrobenianSet::has_root(gauss), 50000, table);
  CHECK(a.hits == b.hits);
  CHECK(a.total == b.total);
  CHECK(a.value == doctest::Approx(static_cast<double>(a.hits) / a.total));
}

TEST_CASE("describe mentions the defining polynomial") {
  auto s = FrobenianSet::has_root(gauss).describe();
  CHECK(s.find("x^2 + 1") != std::string::npos);
  CHECK(FrobenianSet::all_primes().describe() == "all primes");
}

TEST_CASE("certified prime divisors") {
  auto ps = frob::prime_divisors_certified(Int(-360));
  CHECK(ps == std::vector<std::int64_t>{2, 3, 5});
  auto big = frob::prime_divisors_certified(Int("2305843009213693951"));
  CHECK(big == std::vector<std::int64_t>{2305843009213693951});
  CHECK(frob::prime_divisors_certified(Int(1)).empty());
}

TEST_CASE("fixes_component is root existence") {
  CHECK(frob::fixes_component(gauss, 5));
  CHECK_FALSE(frob::fixes_component(gauss, 7));
  CHECK(frob::fixes_component(IntPoly::from_i64({0, 1}), 7));
}
