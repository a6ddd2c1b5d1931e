#include <benchmark/benchmark.h>

#include "valext/closure.hpp"
#include "valext/parse.hpp"
#include "valext/report.hpp"

using namespace valext;

namespace {

const SplittingClosure<Rational>& closure_of(int which) {
  static const SplittingClosure<Rational> c8 = build_splitting_closure<Rational>({to_rational_poly(parse_polynomial("x^4-2"))});
  static const SplittingClosure<Rational> c24 =
      build_splitting_closure<Rational>({to_rational_poly(parse_polynomial("x^4+x+1"))});
  return which == 8 ? c8 : c24;
}

void BM_automorphisms_serial(benchmark::State& st) {
  const auto& cl = closure_of(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_automorphisms_serial(cl));
}

void BM_automorphisms_parallel(benchmark::State& st) {
  const auto& cl = closure_of(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_automorphisms_parallel(cl));
}

const Json& small_corpus() {
  static const Json c = [] {
    Json all = Json::parse(builtin_corpus_text());
    Json out = Json::array();
    // skip the degree 24 closure
    for (const auto& e : all["entries"])
      if (e["spec"]["polys"][0] != "x^4+x+1") out.push_back(e);
    return out;
  }();
  return c;
}

void BM_verify_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_corpus(small_corpus(), false).checks);
}

void BM_verify_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_corpus(small_corpus(), true).checks);
}

}  // namespace

BENCHMARK(BM_automorphisms_serial)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_automorphisms_parallel)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
