#include "doctest.h"

#include <cmath>

#include "orbistat/errors.hpp"
#include "orbistat/fibration.hpp"
#include "orbistat/registry.hpp"
#include "oracles.hpp"

using namespace orbistat;
using orb::FibrationDescriptor;
using poly::IntPoly;

TEST_CASE("orbifold divisor degrees of the registry entries") {
  auto deg = [](const char* key) {
    return orb::orbifold_divisor(registry::lookup(key).descriptor).degree();
  };
  CHECK(deg("t3") == 1);                // two double fibres
  CHECK(deg("double-fibre") == Rat(1, 2));
  CHECK(deg("conjugate-lines") == Rat(1, 2));
  CHECK(deg("quadratic-point") == Rat(2, 3));
  CHECK(deg("hexagon") == Rat(1, 2));
  CHECK(deg("triangle") == Rat(2, 3));

  auto cd = orb::canonical_degree(
      orb::orbifold_divisor(registry::lookup("t3").descriptor));
  CHECK(cd.divisor_degree == 1);
  CHECK(cd.log_canonical_degree == -1);
  CHECK(cd.anti_ample);
}

TEST_CASE("predicted exponents match every registry expectation") {
  for (const auto& e : registry::entries()) {
    auto pred = orb::predicted_exponents(e.descriptor, registry::resolver());
    CHECK(pred.b_exponent == e.expected_b);
    CHECK(pred.delta == e.expected_delta);
    CHECK(pred.anti_ample);
    if (e.expected_theta) {
      REQUIRE(pred.theta.has_value());
      CHECK(*pred.theta == *e.expected_theta);
    }
  }
}

TEST_CASE("delta resolver rule order") {
  const orb::DeltaResolver& R = registry::resolver();
  IntPoly q = IntPoly::from_i64({0, 1});
  IntPoly gauss = IntPoly::from_i64({1, 0, 1});
  IntPoly pure = IntPoly::from_i64({-2, 0, 0, 1});
  IntPoly cyc = IntPoly::from_i64({-1, -3, 0, 1});
  IntPoly eighth = IntPoly::from_i64({1, 0, 0, 0, 1});

  // degree-one e
  CHECK(R.delta(q, gauss) == 0);
  CHECK(R.delta(IntPoly::from_i64({5, 2}), cyc) == 0);
  // registered base fields
  CHECK(R.delta(pure, q) == Rat(1, 3));
  CHECK(R.delta(cyc, q) == Rat(2, 3));
  // registered pairs
  CHECK(R.delta(cyc, gauss) == Rat(2, 3));
  CHECK(R.delta(eighth, gauss) == Rat(1, 2));
  // quadratic pairs through squarefree kernels
  CHECK(R.delta(gauss, q) == Rat(1, 2));
  CHECK(R.delta(gauss, gauss) == 0);
  CHECK(R.delta(IntPoly::from_i64({-8, 0, 1}), IntPoly::from_i64({-2, 0, 1})) ==
        0);  // both cut out Q(sqrt 2)
  CHECK(R.delta(gauss, IntPoly::from_i64({-2, 0, 1})) == Rat(1, 2));
  // no group data: refused, not guessed
  CHECK_THROWS_AS(R.delta(IntPoly::from_i64({-5, 0, 0, 1}), q),
                  validation_error);
  CHECK_THROWS_AS(R.delta(pure, cyc), validation_error);
}

TEST_CASE("delta empirical agrees with the group value") {
  poly::PrimeTable table(200000);
  const auto& t3 = registry::lookup("t3").descriptor;
  const orb::ClosedPointFibre* middle = nullptr;
  for (const auto& f : t3.points)
    if (!f.at_zero() && !f.at_infinity()) middle = &f;
  REQUIRE(middle != nullptr);
  double emp = orb::delta_dn_empirical(*middle, IntPoly::from_i64({0, 1}),
                                       200000, table);
  CHECK(std::abs(emp - 0.5) < 0.02);
  CHECK(orb::delta_dn_exact(*middle, IntPoly::from_i64({0, 1}),
                            registry::resolver()) == Rat(1, 2));
}

TEST_CASE("theta_v table of the halphen pencil model") {
  const auto& t3 = registry::lookup("t3").descriptor;
  const orb::DeltaResolver& R = registry::resolver();
  for (std::int64_t v : oracle::squarefree_list(50)) {
    Rat got = orb::theta_v_exact(t3, 2, Int(v), Int(1), R);
    Rat want = v == -1 ? Rat(0) : (v == 1 ? Rat(1) : Rat(1, 2));
    CHECK(got == want);
  }
}

TEST_CASE("theta minimum picks the negative twist") {
  const auto& t3 = registry::lookup("t3").descriptor;
  auto tm = orb::theta_min_exact(t3, 2, {2}, registry::resolver());
  CHECK(tm.value == 0);
  CHECK(tm.v0 == -1);
  CHECK(tm.v1 == 1);
  CHECK_FALSE(tm.trivial_d);

  // d = 1 has a single class and theta equals the untwisted exponent
  const auto& cl = registry::lookup("conjugate-lines").descriptor;
  auto tm1 = orb::theta_min_exact(cl, 1, {}, registry::resolver());
  CHECK(tm1.trivial_d);
  CHECK(tm1.value ==
        orb::delta_exponent_exact(cl, registry::resolver()));
}

TEST_CASE("theta empirical tracks the exact value") {
  poly::PrimeTable table(100000);
  const auto& t3 = registry::lookup("t3").descriptor;
  double at_w =
      orb::theta_v_empirical(t3, 2, Int(-1), Int(1), 100000, table);
  double at_2 = orb::theta_v_empirical(t3, 2, Int(2), Int(1), 100000, table);
  CHECK(std::abs(at_w - 0.0) < 0.02);
  CHECK(std::abs(at_2 - 0.5) < 0.02);
}

TEST_CASE("descriptor validation") {
  FibrationDescriptor d;
  d.name = "overlap";
  orb::ClosedPointFibre a, b;
  a.form = poly::BinaryForm::from_i64({0, 1});
  a.components.push_back({"A", 2, IntPoly::from_i64({0, 1})});
  a.min_mult_field = IntPoly::from_i64({0, 1});
  b.form = poly::BinaryForm::from_i64({0, 2});  // proportional to a.form
  b.components.push_back({"B", 2, IntPoly::from_i64({0, 1})});
  b.min_mult_field = IntPoly::from_i64({0, 1});
  d.points = {a, b};
  CHECK_THROWS_AS(d.validate_and_fold(), validation_error);

  FibrationDescriptor e;
  e.name = "reducible-form";
  orb::ClosedPointFibre c;
  c.form = poly::BinaryForm::from_i64({-1, 0, 1});  // (x0-x1)(x0+x1)
  c.components.push_back({"C", 2, IntPoly::from_i64({0, 1})});
  c.min_mult_field = IntPoly::from_i64({0, 1});
  e.points = {c};
  CHECK_THROWS_AS(e.validate_and_fold(), validation_error);
}

TEST_CASE("resultants of distinct fibres fold into the bad set") {
  const auto& qp = registry::lookup("quadratic-point").descriptor;
  // the triple fibre at zero and the middle conic x0^2 + x1^2 meet 2
  CHECK(qp.bad_primes.count(2) == 1);
  const auto& t3 = registry::lookup("t3").descriptor;
  CHECK(t3.bad_primes.count(2) == 1);
}

TEST_CASE("ramification bookkeeping of base changes") {
  CHECK(orb::normalized_ramification(2, 6) == 3);
  CHECK(orb::normalized_ramification(4, 6) == 3);
  CHECK(orb::normalized_ramification(1, 5) == 5);
  CHECK(orb::pullback_multiplicity(6, 2) == 3);
  CHECK(orb::pullback_multiplicity(6, 4) == 3);
  CHECK(orb::pullback_multiplicity(2, 2) == 1);
  CHECK(orb::etale_at(2, 6));
  CHECK_FALSE(orb::etale_at(4, 6));
}

TEST_CASE("hurwitz comparison for orbifold base changes") {
  // degree-2 cover of the bisected line, both branch points multiplicity 2:
  // pullback is etale, the degrees match
  auto eq = orb::rh_compare(0, {{2, {2}}, {2, {2}}}, 2);
  CHECK(eq.equal);
  CHECK(eq.lhs == eq.rhs);
  CHECK(eq.lhs == -2);

  // the same cover with multiplicity-3 branch points: e does not divide
  // m_P, strict inequality
  auto lt = orb::rh_compare(0, {{3, {2}}, {3, {2}}}, 2);
  CHECK_FALSE(lt.equal);
  CHECK(lt.lhs > lt.rhs);
  CHECK(lt.lhs - lt.rhs == Rat(2, 3));

  // a split unramified point keeps the equality: e = 1 divides everything
  auto sp = orb::rh_compare(0, {{2, {2}}, {2, {2}}, {2, {1, 1}}}, 2);
  CHECK(sp.equal);

  // unramified cover of a curve of positive genus, no orbifold points
  auto fl = orb::rh_compare(1, {}, 2);
  CHECK(fl.equal);
  CHECK(fl.lhs == 0);

  CHECK_THROWS_AS(orb::rh_compare(0, {{2, {3}}}, 2), validation_error);
}

TEST_CASE("registry lookup errors list the keys") {
  CHECK_THROWS_WITH_AS(registry::lookup("unknown"),
                       doctest::Contains("t3"), validation_error);
  CHECK(registry::entries().size() == 7);
  for (const auto& e : registry::entries()) {
    CHECK_FALSE(e.summary.empty());
    CHECK_FALSE(e.growth_note.empty());
    if (e.pair_model) CHECK_NOTHROW(e.pair_model->validate());
  }
}
