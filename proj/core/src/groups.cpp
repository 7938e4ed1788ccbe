#include "orbistat/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "orbistat/errors.hpp"

namespace orbistat::groups {

Perm identity_perm(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& f, const Perm& g) {
  Perm r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = f[g[x]];
  return r;
}

Perm inverse(const Perm& f) {
  Perm r(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) r[f[x]] = static_cast<int>(x);
  return r;
}

bool is_permutation(const Perm& f) {
  std::vector<char> seen(f.size(), 0);
  for (int v : f) {
    if (v < 0 || v >= static_cast<int>(f.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

FiniteGroup FiniteGroup::close_generators(int degree,
                                          const std::vector<Perm>& gens,
                                          std::size_t max_order) {
  if (degree <= 0) throw validation_error("group degree must be positive");
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != degree || !is_permutation(g))
      throw validation_error("generator is not a permutation of the stated degree");
  }
  std::set<Perm> elems;
  elems.insert(identity_perm(degree));
  std::vector<Perm> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier) {
      for (const Perm& g : gens) {
        Perm p = compose(e, g);
        if (elems.insert(p).second) {
          if (elems.size() > max_order)
            throw resource_error("group closure exceeds order cap");
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  FiniteGroup G;
  G.degree_ = degree;
  G.elems_.assign(elems.begin(), elems.end());  // lexicographic order
  G.id_idx_ = G.index_of(identity_perm(degree));
  return G;
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || *it != p)
    throw validation_error("permutation is not an element of the group");
  return static_cast<int>(it - elems_.begin());
}

bool Subgroup::contains(int idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens) {
  std::set<int> elems{G.identity_index()};
  std::vector<int> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier)
      for (int g : gens) {
        int p = G.mul(e, g);
        if (elems.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return Subgroup{std::vector<int>(elems.begin(), elems.end())};
}

Subgroup subgroup_from_perms(const FiniteGroup& G, const std::vector<Perm>& gens) {
  std::vector<int> idx;
  idx.reserve(gens.size());
  for (const Perm& g : gens) idx.push_back(G.index_of(g));
  return subgroup_generated(G, idx);
}

Subgroup whole_group(const FiniteGroup& G) {
  Subgroup H;
  H.members.resize(G.order());
  std::iota(H.members.begin(), H.members.end(), 0);
  return H;
}

bool is_subgroup(const FiniteGroup& G, const Subgroup& H) {
  if (H.members.empty()) return false;
  for (int a : H.members)
    for (int b : H.members)
      if (!H.contains(G.mul(a, b))) return false;
  return H.contains(G.identity_index());
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (std::size_t g = 0; g < G.order(); ++g) {
    int gi = G.inv(static_cast<int>(g));
    for (int h : H.members)
      if (!H.contains(G.mul(G.mul(static_cast<int>(g), h), gi))) return false;
  }
  return true;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
  std::size_t n = G.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    std::set<int> orbit;
    for (std::size_t g = 0; g < n; ++g) {
      int gi = G.inv(static_cast<int>(g));
      orbit.insert(G.mul(G.mul(static_cast<int>(g), static_cast<int>(i)), gi));
    }
    std::vector<int> c(orbit.begin(), orbit.end());
    for (int e : c) cls[e] = 1;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return out;
}

CosetAction coset_action(const FiniteGroup& G, const Subgroup& H) {
  if (!is_subgroup(G, H)) throw validation_error("H is not a subgroup");
  std::size_t n = G.order();
  CosetAction A;
  A.coset_of.assign(n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    if (A.coset_of[g] >= 0) continue;
    int c = A.num_cosets++;
    A.representative.push_back(static_cast<int>(g));  // smallest member: scan order
    for (int h : H.members) A.coset_of[G.mul(static_cast<int>(g), h)] = c;
  }
  A.act.assign(n, std::vector<int>(A.num_cosets));
  for (std::size_t g = 0; g < n; ++g)
    for (int c = 0; c < A.num_cosets; ++c)
      A.act[g][c] = A.coset_of[G.mul(static_cast<int>(g), A.representative[c])];
  return A;
}

int fixed_point_count(const CosetAction& A, int g) {
  int k = 0;
  for (int c = 0; c < A.num_cosets; ++c)
    if (A.act[g][c] == c) ++k;
  return k;
}

std::pair<Int, Int> fixpoints_class_sum(const FiniteGroup& G, const Subgroup& H,
                                        const std::vector<int>& cls) {
  CosetAction A = coset_action(G, H);
  Int lhs = 0, in_h = 0;
  for (int g : cls) {
    lhs += fixed_point_count(A, g);
    if (H.contains(g)) ++in_h;
  }
  Int rhs = Int(G.order() / H.order()) * in_h;
  return {lhs, rhs};
}

ProductSetSizes product_set_check(const FiniteGroup& G, const Subgroup& S,
                                  const Subgroup& T) {
  std::set<int> st;
  for (int s : S.members)
    for (int t : T.members) st.insert(G.mul(s, t));
  std::vector<int> inter;
  std::set_intersection(S.members.begin(), S.members.end(), T.members.begin(),
                        T.members.end(), std::back_inserter(inter));
  return {S.order(), T.order(), inter.size(), st.size()};
}

std::vector<int> conjugate_union(const FiniteGroup& G, const Subgroup& H2) {
  std::set<int> T;
  for (std::size_t t = 0; t < G.order(); ++t) {
    int ti = G.inv(static_cast<int>(t));
    for (int h : H2.members) T.insert(G.mul(G.mul(static_cast<int>(t), h), ti));
  }
  return std::vector<int>(T.begin(), T.end());
}

Subgroup normal_core(const FiniteGroup& G, const Subgroup& H2) {
  std::set<int> core(H2.members.begin(), H2.members.end());
  for (std::size_t t = 0; t < G.order(); ++t) {
    int ti = G.inv(static_cast<int>(t));
    std::set<int> conj;
    for (int h : H2.members) conj.insert(G.mul(G.mul(static_cast<int>(t), h), ti));
    std::set<int> next;
    std::set_intersection(core.begin(), core.end(), conj.begin(), conj.end(),
                          std::inserter(next, next.begin()));
    core = std::move(next);
  }
  return Subgroup{std::vector<int>(core.begin(), core.end())};
}

Rat delta_group(const FiniteGroup& G, const Subgroup& H1, const Subgroup& H2) {
  if (!is_subgroup(G, H1) || !is_subgroup(G, H2))
    throw validation_error("delta_group: arguments must be subgroups");
  std::vector<int> T = conjugate_union(G, H2);
  std::size_t hits = 0;
  for (int h : H1.members)
    if (std::binary_search(T.begin(), T.end(), h)) ++hits;
  return Rat(1) - Rat(Int(hits), Int(H1.order()));
}

DeltaReduction delta_normal_closure_reduction(const FiniteGroup& G,
                                              const Subgroup& H1,
                                              const Subgroup& H2) {
  DeltaReduction out;
  out.direct = delta_group(G, H1, H2);
  Subgroup core = normal_core(G, H2);
  std::vector<int> gens = H1.members;
  gens.insert(gens.end(), core.members.begin(), core.members.end());
  Subgroup enlarged = subgroup_generated(G, gens);
  out.enlarged_h1_order = enlarged.order();
  out.reduced = delta_group(G, enlarged, H2);
  return out;
}

}  // namespace orbistat::groups
