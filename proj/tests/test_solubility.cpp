#include "doctest.h"

#include "orbistat/counting.hpp"
#include "orbistat/errors.hpp"
#include "orbistat/registry.hpp"
#include "orbistat/solubility.hpp"
#include "oracles.hpp"

using namespace orbistat;
using sol::Mode;
using sol::Outcome;
using sol::RationalPoint;

TEST_CASE("rational point normalization") {
  auto p = RationalPoint::make(Int(-6), Int(4));
  CHECK(p.x0 == 3);
  CHECK(p.x1 == -2);
  CHECK(p.height() == 3);
  CHECK(p.str() == "(3 : -2)");
  auto z = RationalPoint::make(Int(0), Int(-5));
  CHECK(z.x0 == 0);
  CHECK(z.x1 == 1);
  auto inf = RationalPoint::make(Int(7), Int(0));
  CHECK(inf.x0 == 1);
  CHECK(inf.x1 == 0);
  CHECK_THROWS_AS(RationalPoint::make(Int(0), Int(0)), validation_error);
}

TEST_CASE("positive span membership against the recursion") {
  std::vector<std::vector<int>> mult_sets = {
      {2}, {3}, {2, 3}, {2, 6}, {4, 6}, {3, 4, 5}, {6}};
  for (const auto& mults : mult_sets)
    for (std::int64_t n = 0; n <= 60; ++n)
      CHECK(sol::positive_span_member(n, mults) == oracle::span_brute(n, mults));
}

TEST_CASE("mode round trips") {
  for (Mode m : {Mode::sufficient, Mode::necessary, Mode::clique})
    CHECK(sol::mode_from_string(sol::to_string(m)) == m);
  CHECK_THROWS_AS(sol::mode_from_string("optimistic"), validation_error);
}

TEST_CASE("local condition at a double fibre") {
  const auto& fibre = *registry::lookup("double-fibre")
                           .descriptor.fibre_at_zero();
  // odd valuation: the sufficient test cannot lift, the necessary test
  // rejects below the multiplicity
  CHECK(sol::local_condition_at(fibre, 1, 5, Mode::sufficient).outcome ==
        Outcome::undetermined);
  CHECK(sol::local_condition_at(fibre, 1, 5, Mode::necessary).outcome ==
        Outcome::insoluble);
  CHECK(sol::local_condition_at(fibre, 2, 5, Mode::sufficient).outcome ==
        Outcome::soluble);
  CHECK(sol::local_condition_at(fibre, 3, 5, Mode::necessary).outcome ==
        Outcome::undetermined);
  CHECK(sol::local_condition_at(fibre, 2, 5, Mode::clique).outcome ==
        Outcome::soluble);
  CHECK(sol::local_condition_at(fibre, 3, 5, Mode::clique).outcome ==
        Outcome::insoluble);
}

TEST_CASE("conjugate components decide by frobenius") {
  const auto& t3 = registry::lookup("t3").descriptor;
  const orb::ClosedPointFibre* middle = nullptr;
  for (const auto& f : t3.points)
    if (!f.at_zero() && !f.at_infinity()) middle = &f;
  REQUIRE(middle != nullptr);
  // 5 = 1 mod 4 fixes the pair of conjugate lines, 7 = 3 mod 4 swaps them
  CHECK(sol::local_condition_at(*middle, 1, 5, Mode::sufficient).outcome ==
        Outcome::soluble);
  CHECK(sol::local_condition_at(*middle, 1, 7, Mode::sufficient).outcome ==
        Outcome::undetermined);
  CHECK(sol::local_condition_at(*middle, 1, 7, Mode::necessary).outcome ==
        Outcome::insoluble);
  CHECK(sol::local_condition_at(*middle, 2, 7, Mode::necessary).outcome ==
        Outcome::undetermined);
}

TEST_CASE("clique test on the intersecting sncd configuration") {
  const auto& entry = registry::lookup("sncd-lines");
  CHECK(entry.default_mode == Mode::clique);
  const auto& fibre = *entry.descriptor.fibre_at_zero();
  REQUIRE(fibre.components.size() == 2);
  // components of multiplicities 2 and 6 meeting in a point; with both
  // fixed the span is {2,4,6,...} + {6,12,...} and unions thereof
  std::vector<char> both{1, 1};
  CHECK(sol::clique_soluble(fibre, 2, both));
  CHECK(sol::clique_soluble(fibre, 8, both));
  CHECK_FALSE(sol::clique_soluble(fibre, 3, both));
  std::vector<char> only_six{0, 1};
  CHECK(sol::clique_soluble(fibre, 6, only_six));
  CHECK_FALSE(sol::clique_soluble(fibre, 2, only_six));
  std::vector<char> neither{0, 0};
  CHECK_FALSE(sol::clique_soluble(fibre, 6, neither));
}

TEST_CASE("clique and valuation tests through the full report") {
  poly::PrimeTable table(2000);
  const auto& sncd = registry::lookup("sncd-lines").descriptor;
  // 3^6 on the first coordinate: valuation 6 at the split prime 3 needs
  // nothing, and 3 is outside the folded bad set or handled there
  auto accept = [&](std::int64_t a, std::int64_t b, Mode m) {
    return sol::soluble_away_from_s(sncd, RationalPoint::make(Int(a), Int(b)),
                                    m, table)
        .overall;
  };
  // v_p = 6 always passes the clique test where some component is fixed
  CHECK(accept(64, 1, Mode::clique));      // 2^6
  CHECK(accept(15625, 1, Mode::clique));   // 5^6
  // v_p = 2 needs the multiplicity-2 line fixed: its field splits at
  // p = 1 mod cubic-splitting pattern
  CHECK(accept(25, 1, Mode::clique) ==
        frob::fixes_component(sncd.fibre_at_zero()->components[0].field_poly,
                              5));
}

TEST_CASE("t3 model counts equal the hand-derived conditions") {
  poly::PrimeTable table(2000);
  const auto& t3 = registry::lookup("t3");
  for (std::int64_t B : {30, 100, 300}) {
    auto r = count::count_nloc_example(t3.descriptor, B, t3.default_mode, table);
    std::int64_t brute = 0;
    for (std::int64_t a = 1; a <= B; ++a)
      for (std::int64_t b = -B; b <= B; ++b) {
        if (std::gcd(a, b < 0 ? -b : b) != 1) continue;
        if (oracle::t3_accept_brute(a, b)) ++brute;
      }
    CHECK(r.points == brute);
    CHECK(r.on_divisor == 3);  // (0:1), (1:0), (1:1)
  }
}

TEST_CASE("frozen t3 counts") {
  poly::PrimeTable table(2000);
  const auto& t3 = registry::lookup("t3");
  auto at = [&](std::int64_t B) {
    return count::count_nloc_example(t3.descriptor, B, t3.default_mode, table)
        .points;
  };
  CHECK(at(30) == 35);
  CHECK(at(100) == 119);
  CHECK(at(300) == 331);
}

TEST_CASE("the lower-bound family lands in the accepted set") {
  poly::PrimeTable table(5000);
  const auto& t3 = registry::lookup("t3");
  for (std::int64_t u = 1; u <= 40; ++u)
    for (std::int64_t v = 1; v <= 40; ++v) {
      if (std::gcd(u, v) != 1) continue;
      if (u % 2 == 0 && v % 2 == 0) continue;
      auto x = RationalPoint::make(Int(u * u), Int(-v * v));
      auto rep = sol::soluble_away_from_s(t3.descriptor, x, t3.default_mode,
                                          table);
      CHECK(rep.overall);
      CHECK_FALSE(rep.on_divisor);
    }
}

TEST_CASE("points on a marked fibre are flagged, not tested") {
  poly::PrimeTable table(100);
  const auto& t3 = registry::lookup("t3").descriptor;
  auto rep = sol::soluble_away_from_s(t3, RationalPoint::make(Int(1), Int(1)),
                                      Mode::sufficient, table);
  CHECK(rep.on_divisor);
  CHECK(rep.verdicts.empty());
}

TEST_CASE("necessary mode is weaker than sufficient") {
  poly::PrimeTable table(2000);
  const auto& hex = registry::lookup("hexagon");
  std::int64_t nec = 0, suf = 0;
  for (std::int64_t a = 1; a <= 60; ++a)
    for (std::int64_t b = -60; b <= 60; ++b) {
      if (std::gcd(a, b < 0 ? -b : b) != 1) continue;
      auto x = RationalPoint::make(Int(a), Int(b));
      auto rn = sol::soluble_away_from_s(hex.descriptor, x, Mode::necessary,
                                         table);
      auto rs = sol::soluble_away_from_s(hex.descriptor, x, Mode::sufficient,
                                         table);
      if (rn.on_divisor) continue;
      nec += rn.overall;
      suf += rs.overall;
      if (rs.overall) CHECK(rn.overall);
    }
  CHECK(nec >= suf);
}
