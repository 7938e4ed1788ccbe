#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbistat/rational.hpp"

namespace orbistat::groups {

// A permutation of {0,...,n-1} stored as its image vector.
using Perm = std::vector<int>;

Perm identity_perm(int degree);
Perm compose(const Perm& f, const Perm& g);  // (f*g)(x) = f(g(x))
Perm inverse(const Perm& f);
bool is_permutation(const Perm& f);

// A finite permutation group with a canonical element order (lexicographic on
// image vectors).  Element 0 need not be the identity.
class FiniteGroup {
 public:
  // Closes the generators under composition.  Throws validation_error on a
  // malformed generator, resource_error if the order would exceed max_order.
  static FiniteGroup close_generators(int degree, const std::vector<Perm>& gens,
                                      std::size_t max_order = 100000);

  int degree() const { return degree_; }
  std::size_t order() const { return elems_.size(); }
  const Perm& element(int i) const { return elems_[i]; }
  const std::vector<Perm>& elements() const { return elems_; }

  int index_of(const Perm& p) const;  // throws validation_error if absent
  int identity_index() const { return id_idx_; }
  int mul(int i, int j) const { return index_of(compose(elems_[i], elems_[j])); }
  int inv(int i) const { return index_of(inverse(elems_[i])); }

 private:
  int degree_ = 0;
  int id_idx_ = 0;
  std::vector<Perm> elems_;
};

// A subgroup given by the sorted indices of its members in the parent group.
struct Subgroup {
  std::vector<int> members;

  std::size_t order() const { return members.size(); }
  bool contains(int idx) const;
};

// Closure of the given element indices inside G.
Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens);
Subgroup subgroup_from_perms(const FiniteGroup& G, const std::vector<Perm>& gens);
Subgroup whole_group(const FiniteGroup& G);
bool is_subgroup(const FiniteGroup& G, const Subgroup& H);
bool is_normal(const FiniteGroup& G, const Subgroup& H);

// Conjugacy classes, each a sorted index list; classes ordered by
// (size, smallest member index).
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G);

// The action of G on the left cosets gH, cosets ordered by smallest member.
struct CosetAction {
  int num_cosets = 0;
  std::vector<int> coset_of;           // element index -> coset index
  std::vector<int> representative;     // coset index -> element index
  std::vector<std::vector<int>> act;   // act[g][c] = image coset of c under g
};

CosetAction coset_action(const FiniteGroup& G, const Subgroup& H);

int fixed_point_count(const CosetAction& A, int g);

// Both sides of the fixed-point count identity for a conjugacy class C:
//   sum_{g in C} #Fix_g(G/H)  ==  (#G / #H) * #(C intersect H).
std::pair<Int, Int> fixpoints_class_sum(const FiniteGroup& G, const Subgroup& H,
                                        const std::vector<int>& cls);

// (#S, #T, #(S intersect T), #(S*T)); the product-set identity states
// #S * #T == #(S intersect T) * #(S*T) when S, T are subgroups.
struct ProductSetSizes {
  std::size_t s, t, s_and_t, st;
};
ProductSetSizes product_set_check(const FiniteGroup& G, const Subgroup& S,
                                  const Subgroup& T);

// T = union of the conjugates of H2 in G (as a sorted index list).
std::vector<int> conjugate_union(const FiniteGroup& G, const Subgroup& H2);

// Normal core: intersection of all conjugates of H2.
Subgroup normal_core(const FiniteGroup& G, const Subgroup& H2);

// delta(E, K) for a Galois extension L/Q with group G, K the fixed field of
// H1 and E the fixed field of H2:
//   delta = 1 - #(T intersect H1) / #H1,  T = union of conjugates of H2.
// Exact rational in [0, 1).
Rat delta_group(const FiniteGroup& G, const Subgroup& H1, const Subgroup& H2);

// Computes delta twice: directly, and through the reduction that replaces H1
// by <H1, core(H2)>.  The two values agree.
struct DeltaReduction {
  Rat direct;
  Rat reduced;
  std::size_t enlarged_h1_order;
};
DeltaReduction delta_normal_closure_reduction(const FiniteGroup& G,
                                              const Subgroup& H1,
                                              const Subgroup& H2);

}  // namespace orbistat::groups
