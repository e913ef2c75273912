#include <benchmark/benchmark.h>

#include "germkit/groupoid.hpp"
#include "germkit/oracle.hpp"
#include "germkit/profinite.hpp"
#include "germkit/quasilattice.hpp"
#include "germkit/sampling.hpp"
#include "germkit/text.hpp"

using namespace germkit;

namespace {

std::vector<Word> words(std::size_t count) {
  Rng rng(42);
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_word(rng));
  return out;
}

void BM_CrtMeet(benchmark::State& state) {
  Residue a = Residue::make(7, 360), b = Residue::make(11, 1001);
  for (auto _ : state) benchmark::DoNotOptimize(crt_meet(a, b));
}
BENCHMARK(BM_CrtMeet);

void BM_Normalize(benchmark::State& state) {
  auto corpus = words(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(corpus[i++ % corpus.size()]));
}
BENCHMARK(BM_Normalize);

void BM_Mul(benchmark::State& state) {
  Rng rng(7);
  std::vector<Element> pool;
  for (int i = 0; i < 256; ++i) pool.push_back(random_element(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(pool[i % 256], pool[(i * 7 + 3) % 256]));
    ++i;
  }
}
BENCHMARK(BM_Mul);

void BM_OracleTable(benchmark::State& state) {
  auto corpus = words(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::pmap_of_word(corpus[i++ % corpus.size()], state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleTable)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_Ultrafilters(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ultrafilters(state.range(0)));
}
BENCHMARK(BM_Ultrafilters)->Arg(12)->Arg(360)->Arg(27720);

void BM_MaximalFiltersBrute(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::maximal_filters_brute(state.range(0)));
}
BENCHMARK(BM_MaximalFiltersBrute)->DenseRange(4, 12, 4);

void BM_GermCompose(benchmark::State& state) {
  Element v = normalize(parse_word("s(2)* u(1) s(3)"));
  Element w = normalize(parse_word("s(5)* u(2) s(7)"));
  Element vw = mul(v, w);
  auto pr = TruncatedProfinite::make(*germkit::apply(vw, vw.dom().shift()), 27720);
  Germ g1 = germ_of(pr, v);
  Germ g2 = germ_of(source(g1), w);
  for (auto _ : state) benchmark::DoNotOptimize(compose(g1, g2));
}
BENCHMARK(BM_GermCompose);

void BM_Sigma(benchmark::State& state) {
  PElem s{7, 12}, t{3, 8};
  for (auto _ : state) benchmark::DoNotOptimize(sigma(s, t));
}
BENCHMARK(BM_Sigma);

void BM_ParseWord(benchmark::State& state) {
  const std::string text = "s(2)* u(1) s(3) s(5)* u(2) s(7) e(15) u(-4)";
  for (auto _ : state) benchmark::DoNotOptimize(parse_word(text));
}
BENCHMARK(BM_ParseWord);

}  // namespace

BENCHMARK_MAIN();
