#include "doctest.h"

#include <algorithm>
#include <set>

#include "orbistat/errors.hpp"
#include "orbistat/groups.hpp"
#include "oracles.hpp"

using namespace orbistat;
using groups::FiniteGroup;
using groups::Perm;
using groups::Subgroup;

namespace {

FiniteGroup corpus_group(const std::string& name) {
  for (const auto& g : oracle::group_corpus())
    if (g.name == name) return FiniteGroup::close_generators(g.degree, g.gens);
  throw std::runtime_error("no such corpus group");
}

Subgroup from_elems(const FiniteGroup& G, const std::vector<Perm>& elems) {
  std::vector<int> idx;
  for (const Perm& p : elems) idx.push_back(G.index_of(p));
  return groups::subgroup_generated(G, idx);
}

}  // namespace

TEST_CASE("permutation primitives") {
  Perm a{1, 0, 2}, b{1, 2, 0};
  CHECK(groups::compose(a, b) == Perm{0, 2, 1});
  CHECK(groups::compose(b, a) == Perm{2, 1, 0});
  CHECK(groups::inverse(b) == Perm{2, 0, 1});
  CHECK(groups::is_permutation(a));
  CHECK_FALSE(groups::is_permutation(Perm{0, 0, 1}));
  CHECK(groups::identity_perm(3) == Perm{0, 1, 2});
}

TEST_CASE("closure orders of the corpus") {
  CHECK(corpus_group("s3").order() == 6);
  CHECK(corpus_group("s4").order() == 24);
  CHECK(corpus_group("d4").order() == 8);
  CHECK(corpus_group("c6").order() == 6);
  CHECK(corpus_group("q8").order() == 8);
  CHECK_THROWS_AS(FiniteGroup::close_generators(3, {{0, 0, 1}}),
                  validation_error);
  CHECK_THROWS_AS(FiniteGroup::close_generators(4, {{1, 2, 3, 0}}, 3),
                  resource_error);
}

TEST_CASE("conjugacy class shapes") {
  auto sizes = [](const FiniteGroup& G) {
    std::vector<std::size_t> s;
    for (const auto& c : groups::conjugacy_classes(G)) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(sizes(corpus_group("s3")) == std::vector<std::size_t>{1, 2, 3});
  CHECK(sizes(corpus_group("s4")) == std::vector<std::size_t>{1, 3, 6, 6, 8});
  CHECK(sizes(corpus_group("d4")) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(sizes(corpus_group("c6")) ==
        std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
  CHECK(sizes(corpus_group("q8")) == std::vector<std::size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("subgroup lattice sizes match the brute search") {
  std::vector<std::size_t> expected{6, 30, 10, 4, 6};
  std::size_t i = 0;
  for (const auto& g : oracle::group_corpus()) {
    auto brute = oracle::all_subgroups(oracle::close_perms(g.degree, g.gens));
    CHECK(brute.size() == expected[i++]);
  }
}

TEST_CASE("coset action of a point stabilizer") {
  FiniteGroup s3 = corpus_group("s3");
  Subgroup stab = groups::subgroup_from_perms(s3, {{0, 2, 1}});
  CHECK(stab.order() == 2);
  CHECK_FALSE(groups::is_normal(s3, stab));
  auto A = groups::coset_action(s3, stab);
  CHECK(A.num_cosets == 3);
  for (std::size_t g = 0; g < s3.order(); ++g) {
    std::set<int> image;
    for (int c = 0; c < A.num_cosets; ++c) image.insert(A.act[g][c]);
    CHECK(image.size() == 3);
  }
  CHECK(groups::fixed_point_count(A, s3.identity_index()) == 3);
}

TEST_CASE("fixed-point and product-set identities over every subgroup pair") {
  for (const auto& g : oracle::group_corpus()) {
    FiniteGroup G = FiniteGroup::close_generators(g.degree, g.gens);
    auto subs = oracle::all_subgroups(oracle::close_perms(g.degree, g.gens));
    auto classes = groups::conjugacy_classes(G);
    for (const auto& h1 : subs) {
      Subgroup H1 = from_elems(G, h1);
      for (const auto& cls : classes) {
        auto [lhs, rhs] = groups::fixpoints_class_sum(G, H1, cls);
        CHECK(lhs == rhs);
      }
      for (const auto& h2 : subs) {
        Subgroup H2 = from_elems(G, h2);
        auto sizes = groups::product_set_check(G, H1, H2);
        CHECK(sizes.s * sizes.t == sizes.s_and_t * sizes.st);
      }
    }
  }
}

TEST_CASE("delta against the brute union of conjugates") {
  for (const auto& g : oracle::group_corpus()) {
    auto raw = oracle::close_perms(g.degree, g.gens);
    FiniteGroup G = FiniteGroup::close_generators(g.degree, g.gens);
    auto subs = oracle::all_subgroups(raw);
    for (const auto& h1 : subs)
      for (const auto& h2 : subs) {
        Rat got = groups::delta_group(G, from_elems(G, h1), from_elems(G, h2));
        auto [num, den] = oracle::delta_brute(raw, h1, h2);
        CHECK(got == Rat(num, den));
      }
  }
}

TEST_CASE("two delta routes agree on every pair") {
  for (const auto& g : oracle::group_corpus()) {
    FiniteGroup G = FiniteGroup::close_generators(g.degree, g.gens);
    auto subs = oracle::all_subgroups(oracle::close_perms(g.degree, g.gens));
    for (const auto& h1 : subs)
      for (const auto& h2 : subs) {
        auto r = groups::delta_normal_closure_reduction(G, from_elems(G, h1),
                                                        from_elems(G, h2));
        CHECK(r.direct == r.reduced);
      }
  }
}

TEST_CASE("normal core and conjugate union") {
  FiniteGroup s4 = corpus_group("s4");
  Subgroup stab = groups::subgroup_from_perms(s4, {{0, 2, 1, 3}, {0, 1, 3, 2}});
  CHECK(stab.order() == 6);
  CHECK(groups::normal_core(s4, stab).order() == 1);
  // elements with a fixed point in the natural action: all but the
  // 4-cycles and the double transpositions
  CHECK(groups::conjugate_union(s4, stab).size() == 24 - 6 - 3);

  FiniteGroup q8 = corpus_group("q8");
  Subgroup i_gen = groups::subgroup_from_perms(q8, {{2, 3, 1, 0, 6, 7, 5, 4}});
  CHECK(i_gen.order() == 4);
  CHECK(groups::is_normal(q8, i_gen));
  CHECK(groups::normal_core(q8, i_gen).order() == 4);
}

TEST_CASE("delta values quoted for the field corpus") {
  // cubic with group s3: stabilizer of a point, over the rationals
  FiniteGroup s3 = corpus_group("s3");
  CHECK(groups::delta_group(s3, groups::whole_group(s3),
                            groups::subgroup_from_perms(s3, {{0, 2, 1}})) ==
        Rat(1, 3));
  // quadratic: index-two subgroup of c2
  FiniteGroup c2 = FiniteGroup::close_generators(2, {{1, 0}});
  CHECK(groups::delta_group(c2, groups::whole_group(c2),
                            groups::subgroup_from_perms(c2, {})) == Rat(1, 2));
  // cyclic cubic: trivial h2 inside c3
  FiniteGroup c3 = FiniteGroup::close_generators(3, {{1, 2, 0}});
  CHECK(groups::delta_group(c3, groups::whole_group(c3),
                            groups::subgroup_from_perms(c3, {})) == Rat(2, 3));
  // e contained in k: delta vanishes
  CHECK(groups::delta_group(c2, groups::subgroup_from_perms(c2, {}),
                            groups::subgroup_from_perms(c2, {})) == 0);
  // c6 with h1, h2 the two proper subgroups: the quadratic-point value
  FiniteGroup c6 = corpus_group("c6");
  Subgroup h1 = groups::subgroup_from_perms(c6, {{2, 3, 4, 5, 0, 1}});
  Subgroup h2 = groups::subgroup_from_perms(c6, {{3, 4, 5, 0, 1, 2}});
  CHECK(groups::delta_group(c6, h1, h2) == Rat(2, 3));
}
