#include <benchmark/benchmark.h>

#include <random>

#include "plectic/json_io.hpp"
#include "plectic/string_lie2.hpp"

namespace {

using namespace plectic;

InnerProduct negative_killing(const LieAlgebra& g) {
  return InnerProduct(Rational(-1) * killing_form(g));
}

Matrix random_rational_matrix(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  Matrix m(n, n);
  for (auto& x : m.a) x = Rational(num(rng), den(rng));
  return m;
}

void BM_bareiss_rank(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const Matrix m = random_rational_matrix(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_bareiss_rank)->Arg(6)->Arg(10)->Arg(14);

void BM_ce_differential_su3(benchmark::State& state) {
  const LieAlgebra g = make_su(3);
  const AltForm nu = invariant_three_form(g, negative_killing(g), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(ce_differential(g, nu));
}
BENCHMARK(BM_ce_differential_su3);

void BM_build_L_s_su3(benchmark::State& state) {
  const LieAlgebra g = make_su(3);
  const PlecticStructure p = PlecticStructure::build(g, negative_killing(g), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_L_s(p));
}
BENCHMARK(BM_build_L_s_su3);

void BM_verify_lie2_su3(benchmark::State& state) {
  const LieAlgebra g = make_su(3);
  const StringData sd(g, negative_killing(g), Rational(1));
  const Lie2Algebra L = build_string_s(sd);
  for (auto _ : state) benchmark::DoNotOptimize(verify_lie2(L));
}
BENCHMARK(BM_verify_lie2_su3);

void BM_four_way_certificate(benchmark::State& state) {
  const LieAlgebra g = state.range(0) == 0 ? make_so(3) : make_su(3);
  const InnerProduct ip = negative_killing(g);
  for (auto _ : state) benchmark::DoNotOptimize(four_way_certificate(g, ip, Rational(1)));
}
BENCHMARK(BM_four_way_certificate)->Arg(0)->Arg(1);

void BM_certificate_json(benchmark::State& state) {
  const LieAlgebra g = make_so(3);
  const auto cert = four_way_certificate(g, negative_killing(g), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(certificate_to_json(cert));
}
BENCHMARK(BM_certificate_json);

}  // namespace

BENCHMARK_MAIN();
