#include <benchmark/benchmark.h>

#include "singcoh/catalog.hpp"
#include "singcoh/detection.hpp"
#include "singcoh/io.hpp"
#include "singcoh/kite.hpp"
#include "singcoh/normalform.hpp"
#include "singcoh/polymatrix.hpp"
#include "singcoh/stiefel.hpp"
#include "test_support.hpp"

using namespace singcoh;

static void BM_SymbolicDeterminant(benchmark::State& state) {
  const auto a = testsupport::generic_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(a));
}
BENCHMARK(BM_SymbolicDeterminant)->DenseRange(3, 5);

static void BM_SymbolicPfaffian(benchmark::State& state) {
  const auto a = testsupport::generic_skew(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
}
BENCHMARK(BM_SymbolicPfaffian)->DenseRange(4, 8, 2);

static void BM_Factorize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const CMatrix b = random_unitary(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(factorize(b));
}
BENCHMARK(BM_Factorize)->DenseRange(2, 8, 2);

static void BM_NormalForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto family = static_cast<Family>(state.range(0));
  const auto a = testsupport::random_of_rank(rng, family, 6, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rank_normal_form(a, family));
}
BENCHMARK(BM_NormalForm)
    ->Arg(static_cast<int>(Family::General))
    ->Arg(static_cast<int>(Family::Symmetric))
    ->Arg(static_cast<int>(Family::SkewSymmetric));

static void BM_KiteCertification(benchmark::State& state) {
  const auto germ = io::polymatrix_from_json(
      io::parse_json(testsupport::read_file(testsupport::fixture("general5_germ.json"))));
  const std::map<std::string, Rational> zeros{{"y1", 0}, {"y2", 0}, {"y3", 0}, {"y4", 0}};
  const KiteSpec spec{MatrixKind::general(5), 4};
  for (auto _ : state) benchmark::DoNotOptimize(certify_containment(germ, zeros, spec));
}
BENCHMARK(BM_KiteCertification);

static void BM_LinearKiteMatch(benchmark::State& state) {
  const KiteSpec spec{MatrixKind::rectangular(8, 6), 3};
  const auto f = linear_kite_map(spec);
  for (auto _ : state) benchmark::DoNotOptimize(match_linear_kite(f, spec));
}
BENCHMARK(BM_LinearKiteMatch);

static void BM_Detection(benchmark::State& state) {
  const auto kind = MatrixKind::general(8);
  for (auto _ : state)
    benchmark::DoNotOptimize(detect_complement(kind, 7, Coefficients::Integers).betti());
}
BENCHMARK(BM_Detection);

BENCHMARK_MAIN();
