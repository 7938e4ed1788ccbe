#include "orbistat/registry.hpp"

#include "orbistat/errors.hpp"

namespace orbistat::registry {
namespace {

using groups::FiniteGroup;
using groups::Perm;
using orb::ClosedPointFibre;
using orb::FibrationDescriptor;
using poly::BinaryForm;
using poly::IntPoly;

IntPoly q_poly() { return poly::poly_x(); }
IntPoly gauss_poly() { return IntPoly::from_i64({1, 0, 1}); }
IntPoly cyclic_cubic() { return IntPoly::from_i64({-1, -3, 0, 1}); }
IntPoly pure_cubic() { return IntPoly::from_i64({-2, 0, 0, 1}); }
IntPoly eighth_roots() { return IntPoly::from_i64({1, 0, 0, 0, 1}); }

ClosedPointFibre coord_fibre(bool at_zero, const std::string& label, int mult,
                             const IntPoly& field) {
  ClosedPointFibre f;
  f.form = BinaryForm::from_i64(at_zero ? std::vector<std::int64_t>{0, 1}
                                        : std::vector<std::int64_t>{1, 0});
  f.components.push_back({label, mult, field});
  f.min_mult_field = field;
  return f;
}

Entry make_t3() {
  Entry e;
  e.key = "t3";
  e.summary =
      "Double fibres over 0 and infinity; over t = 1 a pair of conjugate "
      "lines interchanged over Q(i).";
  FibrationDescriptor d;
  d.name = e.key;
  d.bad_primes = {2};
  d.points.push_back(coord_fibre(true, "F0", 2, q_poly()));
  d.points.push_back(coord_fibre(false, "Finf", 2, q_poly()));
  ClosedPointFibre mid;
  mid.form = BinaryForm::from_i64({-1, 1});
  mid.components.push_back({"L", 1, gauss_poly()});
  mid.components.push_back({"Lbar", 1, gauss_poly()});
  mid.min_mult_field = gauss_poly();
  mid.intersections = {{0, 1}};
  d.points.push_back(mid);
  d.validate_and_fold();
  e.descriptor = std::move(d);
  e.default_mode = sol::Mode::sufficient;
  e.expected_b = 1;
  e.expected_delta = Rat(1, 2);
  e.expected_theta = Rat(0);
  e.growth_note =
      "N_loc(B) grows like B/(log B)^Theta with Theta = Theta_{-1} = 0: a "
      "positive proportion of points passes the local test.";
  e.note =
      "The conjugate pair over t = 1 contributes delta(x^2+1, Q) = 1/2 once, "
      "so Delta = 1/2; quoting 1 comes from counting the two lines of the "
      "pair as separate fibres.";
  return e;
}

Entry make_double_fibre() {
  Entry e;
  e.key = "double-fibre";
  e.summary = "A single double fibre over 0 with a rational component.";
  FibrationDescriptor d;
  d.name = e.key;
  d.points.push_back(coord_fibre(true, "D", 2, q_poly()));
  d.validate_and_fold();
  e.descriptor = std::move(d);
  e.default_mode = sol::Mode::sufficient;
  e.expected_b = Rat(3, 2);
  e.expected_delta = 0;
  e.expected_theta = Rat(0);
  count::PairCountSpec pm;
  pm.m0 = 2;
  pm.m1 = 1;
  e.pair_model = pm;
  e.growth_note =
      "N_loc(B) grows like B^{3/2}: every fibre is split, so there is no "
      "logarithmic saving.";
  e.note =
      "The count is a pure pair model: x0 a square up to sign, x1 free.";
  return e;
}

Entry make_conjugate_lines() {
  Entry e;
  e.key = "conjugate-lines";
  e.summary =
      "A fibre of three conjugate double lines over the cyclic cubic field "
      "of x^3 - 3x - 1.";
  FibrationDescriptor d;
  d.name = e.key;
  ClosedPointFibre f;
  f.form = BinaryForm::from_i64({0, 1});
  f.components.push_back({"L0", 2, cyclic_cubic()});
  f.components.push_back({"L1", 2, cyclic_cubic()});
  f.components.push_back({"L2", 2, cyclic_cubic()});
  f.min_mult_field = cyclic_cubic();
  d.points.push_back(f);
  d.validate_and_fold();
  e.descriptor = std::move(d);
  e.default_mode = sol::Mode::sufficient;
  e.expected_b = Rat(3, 2);
  e.expected_delta = Rat(2, 3);
  e.expected_theta = Rat(2, 3);
  count::PairCountSpec pm;
  pm.m0 = 2;
  pm.m1 = 1;
  pm.P0 = frob::FrobenianSet::has_root(cyclic_cubic());
  pm.S = {3};
  pm.density0 = Rat(1, 3);
  e.pair_model = pm;
  e.growth_note = "N_loc(B) grows like B^{3/2} / (log B)^{2/3}.";
  e.note =
      "Away from 3, a prime dividing x0 must divide it to even order and fix "
      "a line, i.e. split completely in the cubic field (density 1/3).";
  return e;
}

Entry make_sncd_lines() {
  Entry e;
  e.key = "sncd-lines";
  e.summary =
      "A normal-crossing fibre over 0: an orbit of three conjugate double "
      "lines meeting a rational line of multiplicity six.";
  FibrationDescriptor d;
  d.name = e.key;
  ClosedPointFibre f;
  f.form = BinaryForm::from_i64({0, 1});
  f.components.push_back({"A", 2, cyclic_cubic()});
  f.components.push_back({"C", 6, q_poly()});
  f.min_mult_field = cyclic_cubic();
  f.intersections = {{0, 1}};
  d.points.push_back(f);
  d.validate_and_fold();
  e.descriptor = std::move(d);
  e.default_mode = sol::Mode::clique;
  e.expected_b = Rat(3, 2);
  e.expected_delta = Rat(2, 3);
  e.expected_theta = Rat(2, 3);
  e.growth_note =
      "Under the clique test N_loc(B) grows like B^{3/2} / (log B)^{2/3}.";
  e.note =
      "The clique test accepts any valuation divisible by 6 through the "
      "multiplicity-six line, and even valuations at primes split in the "
      "cubic field; it is strictly wider than the minimal-multiplicity "
      "sufficient test.";
  return e;
}

Entry make_quadratic_point() {
  Entry e;
  e.key = "quadratic-point";
  e.summary =
      "A triple fibre over 0 and a non-split fibre over the quadratic point "
      "t^2 + 1 = 0 with components over the cyclic cubic field.";
  FibrationDescriptor d;
  d.name = e.key;
  d.points.push_back(coord_fibre(true, "T", 3, q_poly()));
  ClosedPointFibre mid;
  mid.form = BinaryForm::from_i64({1, 0, 1});
  mid.components.push_back({"M0", 1, cyclic_cubic()});
  mid.components.push_back({"M1", 1, cyclic_cubic()});
  mid.components.push_back({"M2", 1, cyclic_cubic()});
  mid.min_mult_field = cyclic_cubic();
  d.points.push_back(mid);
  d.validate_and_fold();
  e.descriptor = std::move(d);
  e.default_mode = sol::Mode::sufficient;
  e.expected_b = Rat(4, 3);
  e.expected_delta = Rat(2, 3);
  e.expected_theta = Rat(2, 3);
  e.growth_note = "N_loc(B) grows like B^{4/3} / (log B)^{2/3}.";
  e.note =
      "The residue field of the non-split fibre is Q(i), so its contribution "
      "is delta(x^3 - 3x - 1, x^2 + 1) = 2/3 through the order-six group "
      "data.";
  return e;
}

Entry make_hexagon() {
  Entry e;
  e.key = "hexagon";
  e.summary =
      "A double fibre over 0; over infinity a hexagon of six lines in two "
      "conjugate orbits over the cyclic cubic field.";
  FibrationDescriptor d;
  d.name = e.key;
  d.points.push_back(coord_fibre(true, "D", 2, q_poly()));
  ClosedPointFibre hex;
  hex.form = BinaryForm::from_i64({1, 0});
  hex.components.push_back({"H0", 1, cyclic_cubic()});
  hex.components.push_back({"H1", 1, cyclic_cubic()});
  hex.min_mult_field = cyclic_cubic();
  hex.intersections = {{0, 1}};
  d.points.push_back(hex);
  d.validate_and_fold();
  e.descriptor = std::move(d);
  e.default_mode = sol::Mode::necessary;
  e.expected_b = Rat(3, 2);
  e.expected_delta = Rat(2, 3);
  e.expected_theta = Rat(2, 3);
  e.growth_note =
      "The insolubility test bounds N_loc(B) above by a constant times "
      "B^{3/2} / (log B)^{2/3}.";
  e.note =
      "Both orbits of the hexagon share the cubic field, so the minimal "
      "field is unambiguous; the test run here is necessary only.";
  return e;
}

Entry make_triangle() {
  Entry e;
  e.key = "triangle";
  e.summary =
      "A triple fibre over 0; over infinity a triangle of three conjugate "
      "lines over the cyclic cubic field.";
  FibrationDescriptor d;
  d.name = e.key;
  d.points.push_back(coord_fibre(true, "T", 3, q_poly()));
  ClosedPointFibre tri;
  tri.form = BinaryForm::from_i64({1, 0});
  tri.components.push_back({"T0", 1, cyclic_cubic()});
  tri.min_mult_field = cyclic_cubic();
  d.points.push_back(tri);
  d.validate_and_fold();
  e.descriptor = std::move(d);
  e.default_mode = sol::Mode::necessary;
  e.expected_b = Rat(4, 3);
  e.expected_delta = Rat(2, 3);
  e.expected_theta = Rat(2, 3);
  e.growth_note =
      "The insolubility test bounds N_loc(B) above by a constant times "
      "B^{4/3} / (log B)^{2/3}.";
  e.note = "One orbit of three conjugate lines; necessary test only.";
  return e;
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = [] {
    std::vector<Entry> v;
    v.push_back(make_t3());
    v.push_back(make_double_fibre());
    v.push_back(make_conjugate_lines());
    v.push_back(make_sncd_lines());
    v.push_back(make_quadratic_point());
    v.push_back(make_hexagon());
    v.push_back(make_triangle());
    return v;
  }();
  return all;
}

const Entry& lookup(const std::string& key) {
  for (const auto& e : entries())
    if (e.key == key) return e;
  std::string known;
  for (const auto& e : entries()) {
    if (!known.empty()) known += ", ";
    known += e.key;
  }
  throw validation_error("unknown registry key '" + key + "' (known: " + known +
                         ")");
}

const orb::DeltaResolver& resolver() {
  static const orb::DeltaResolver r = [] {
    orb::DeltaResolver R;
    R.register_field(pure_cubic(),
                     FiniteGroup::close_generators(3, {{1, 0, 2}, {1, 2, 0}}),
                     {{0, 2, 1}});
    R.register_field(cyclic_cubic(),
                     FiniteGroup::close_generators(3, {{1, 2, 0}}), {});
    {
      // The compositum of the cyclic cubic field with Q(i): C6 in its regular
      // representation, H1 fixing the quadratic subfield, H2 the cubic one.
      Perm g{1, 2, 3, 4, 5, 0};
      auto G = FiniteGroup::close_generators(6, {g});
      Perm g2 = groups::compose(g, g);
      Perm g3 = groups::compose(g2, g);
      R.register_pair(cyclic_cubic(), gauss_poly(), G, {g2}, {g3});
    }
    // Q(zeta_8) over Q(i): the Klein four group on the roots of x^4 + 1.
    R.register_pair(eighth_roots(), gauss_poly(),
                    FiniteGroup::close_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}),
                    {{2, 3, 0, 1}}, {});
    return R;
  }();
  return r;
}

}  // namespace orbistat::registry
