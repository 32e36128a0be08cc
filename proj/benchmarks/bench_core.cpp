#include <benchmark/benchmark.h>

#include <random>

#include "affalg/fiber.hpp"
#include "affalg/fixtures.hpp"

using namespace affalg;

namespace {

const Field Q = Field::rationals();

MultiPoly bench_poly(std::mt19937_64& rng, std::size_t nvars,
                     std::size_t terms) {
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  std::uniform_int_distribution<long> c(-9, 9);
  MultiPoly p(Q, nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents exp(nvars);
    for (std::size_t i = 0; i < nvars; ++i) exp[i] = e(rng);
    p.add_term(exp, Scalar(Q, c(rng)));
  }
  return p;
}

void BM_PolyMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  MultiPoly p = bench_poly(rng, 6, state.range(0));
  MultiPoly q = bench_poly(rng, 6, state.range(0));
  for (auto _ : state) {
    MultiPoly r = p * q;
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(32)->Arg(128);

void BM_RationalKernel(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> c(-9, 9);
  const std::size_t rows = state.range(0), cols = rows + 10;
  Matrix a(Q, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a.at(i, j) = Scalar(Q, c(rng), 1 + static_cast<long>(j % 3));
  for (auto _ : state) {
    auto basis = kernel(a);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_RationalKernel)->Arg(10)->Arg(20);

void BM_HomJacobiSna2(benchmark::State& state) {
  SnaBundle bundle = sna_structures(build_sna(2, Q));
  const HomLieAffgebra& s = *bundle.hom_lie;
  for (auto _ : state) {
    Verdict v = check_affine_hom_jacobi(s);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_HomJacobiSna2);

void BM_DeltaSpaceSl2(benchmark::State& state) {
  HomLieAlgebra sl2 = classical_homlie("sl2", Q);
  for (auto _ : state) {
    SolutionSpace space = delta_space(sl2);
    benchmark::DoNotOptimize(space);
  }
}
BENCHMARK(BM_DeltaSpaceSl2);

void BM_RoundTrip(benchmark::State& state) {
  HomLieAlgebra sl2 = classical_homlie("sl2", Q);
  AffgebraData d = sample_valid_data(sl2, 1);
  for (auto _ : state) {
    HomLieAffgebra s = build_from_data(d);
    AffgebraData back = extract_data(s, Vector(Q, 3));
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_RoundTrip);

} // namespace

BENCHMARK_MAIN();
