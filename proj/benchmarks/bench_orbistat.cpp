#include <benchmark/benchmark.h>

#include <cstdint>

#include "orbistat/counting.hpp"
#include "orbistat/fibration.hpp"
#include "orbistat/frobenian.hpp"
#include "orbistat/groups.hpp"
#include "orbistat/intpoly.hpp"
#include "orbistat/modpoly.hpp"
#include "orbistat/prime_table.hpp"
#include "orbistat/registry.hpp"
#include "orbistat/sieve.hpp"

using namespace orbistat;

namespace {

const poly::PrimeTable& shared_table() {
  static poly::PrimeTable table(1000000);
  return table;
}

void bm_prime_table(benchmark::State& state) {
  for (auto _ : state) {
    poly::PrimeTable table(static_cast<std::uint32_t>(state.range(0)));
    benchmark::DoNotOptimize(table.primes().size());
  }
}
BENCHMARK(bm_prime_table)->Arg(100000)->Arg(1000000);

void bm_roots_mod_p(benchmark::State& state) {
  poly::IntPoly f = poly::IntPoly::from_i64({-2, 0, 0, 1});
  const auto& table = shared_table();
  std::size_t i = 100;
  for (auto _ : state) {
    std::int64_t p = table.primes()[i++ % 50000];
    benchmark::DoNotOptimize(poly::count_roots_mod_p(f, p));
  }
}
BENCHMARK(bm_roots_mod_p);

void bm_pair_count(benchmark::State& state) {
  count::PairCountSpec flag;
  flag.m0 = 2;
  flag.P0 = frob::FrobenianSet::has_root(poly::IntPoly::from_i64({1, 0, 1}))
                .with_excluded({2});
  flag.S = {2};
  flag.density0 = Rat(1, 2);
  const auto& table = shared_table();
  for (auto _ : state) {
    auto r = count::count_frobenian_pairs(flag, state.range(0), table);
    benchmark::DoNotOptimize(r.pairs);
  }
}
BENCHMARK(bm_pair_count)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void bm_theta_v_exact(benchmark::State& state) {
  const auto& t3 = registry::lookup("t3");
  const auto& R = registry::resolver();
  std::int64_t v = 1;
  for (auto _ : state) {
    v += 2;
    benchmark::DoNotOptimize(orb::theta_v_exact(t3.descriptor, 2, Int(v),
                                                Int(1), R));
  }
}
BENCHMARK(bm_theta_v_exact);

void bm_omega_bar_exact(benchmark::State& state) {
  const auto& t3 = registry::lookup("t3");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sieve::omega_bar_exact(t3.descriptor, state.range(0), Int(1), Int(1)));
}
BENCHMARK(bm_omega_bar_exact)->Arg(7)->Arg(23)->Arg(37);

void bm_nu_point_count(benchmark::State& state) {
  poly::BinaryForm h = poly::BinaryForm::from_i64({-1, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sieve::nu_point_count(97, h, 2, 2, Int(1), Int(1)));
}
BENCHMARK(bm_nu_point_count);

void bm_delta_group_q8(benchmark::State& state) {
  auto G = groups::FiniteGroup::close_generators(
      8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}});
  auto H1 = groups::whole_group(G);
  auto H2 = groups::subgroup_from_perms(G, {{2, 3, 1, 0, 6, 7, 5, 4}});
  for (auto _ : state)
    benchmark::DoNotOptimize(groups::delta_group(G, H1, H2));
}
BENCHMARK(bm_delta_group_q8);

void bm_nloc_t3(benchmark::State& state) {
  const auto& t3 = registry::lookup("t3");
  const auto& table = shared_table();
  for (auto _ : state) {
    auto r = count::count_nloc_example(t3.descriptor, state.range(0),
                                       t3.default_mode, table);
    benchmark::DoNotOptimize(r.points);
  }
}
BENCHMARK(bm_nloc_t3)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
