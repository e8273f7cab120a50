#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "ffcount/equations.hpp"
#include "ffcount/gf.hpp"
#include "ffcount/polys.hpp"
#include "ffcount/valueset.hpp"

namespace {

using namespace ffcount;

const Field& field25() {
  static const Field f(5, 2);
  return f;
}

const Field& field27() {
  static const Field f(3, 3);
  return f;
}

void BM_FieldMul(benchmark::State& state) {
  const Field& f = field25();
  std::uint32_t x = 7;
  for (auto _ : state) {
    x = f.mul(x, 11);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul);

void BM_FieldPow(benchmark::State& state) {
  const Field& f = field27();
  std::uint32_t x = 5;
  for (auto _ : state) {
    x = f.pow(x, 19);
    x = x == 0 ? 5 : x;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldPow);

void BM_DicksonEval(benchmark::State& state) {
  const Field& f = field25();
  const Element a = f.element(3);
  const std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
  std::uint32_t x = 1;
  for (auto _ : state) {
    const Element v = dickson_eval({m, a}, f.element(x));
    benchmark::DoNotOptimize(v.index());
    x = (x + 1) % 25;
  }
}
BENCHMARK(BM_DicksonEval)->Arg(8)->Arg(64)->Arg(512);

void BM_ValueSet(benchmark::State& state) {
  const Field& f = field25();
  const Element a = f.element(2);
  for (auto _ : state) {
    const auto report = dickson_value_count(f, 12, a);
    benchmark::DoNotOptimize(report.cardinality);
  }
}
BENCHMARK(BM_ValueSet);

EquationSpec diagonal_eq(const Field& f, std::size_t n) {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < n; ++j) {
    terms.push_back({f.one(), 2 + j, f.element(static_cast<std::uint32_t>(j % f.q()))});
  }
  return EquationSpec(f, std::move(terms), f.one());
}

void BM_CountNaive(benchmark::State& state) {
  const Field& f = field25();
  const auto eq = diagonal_eq(f, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto report = count_naive(eq);
    benchmark::DoNotOptimize(report.N);
  }
}
BENCHMARK(BM_CountNaive)->Arg(2)->Arg(3)->Arg(4);

void BM_CountConvolution(benchmark::State& state) {
  const Field& f = field25();
  const auto eq = diagonal_eq(f, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto report = count_convolution(eq);
    benchmark::DoNotOptimize(report.N);
  }
}
BENCHMARK(BM_CountConvolution)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
