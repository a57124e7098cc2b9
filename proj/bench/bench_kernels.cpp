// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "qblocks/charring.hpp"
#include "qblocks/linkage.hpp"

using namespace qblocks;

namespace {

const Scalar s = Scalar::symbol("s");

Weight generic(int n) {
  std::vector<Scalar> c;
  for (int i = 0; i < n; ++i) c.push_back(i % 2 ? Scalar(i) - s : s + Scalar(n - i));
  return Weight(c);
}

template <FormalCharacter (*Mul)(const FormalCharacter&, const FormalCharacter&)>
void BM_multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const long depth = state.range(1);
  const auto a = verma_character(generic(n), depth);
  const auto b = verma_character(Weight(std::vector<Scalar>(static_cast<std::size_t>(n), Scalar(0))), depth);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
}

template <std::optional<LinkageWitness> (*Link)(const Weight&, const Weight&)>
void BM_linked_approx(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Scalar> l, m;
  for (int i = 0; i < n; ++i) {
    l.push_back(i % 2 ? -s - Scalar(i) : s + Scalar(i));
    m.push_back(i % 2 ? -s - Scalar(n - 1 - i) : s + Scalar(n - 1 - i) + Scalar(1));
  }
  const Weight lambda(l), mu(m);
  for (auto _ : state) benchmark::DoNotOptimize(Link(lambda, mu));
}

}  // namespace

BENCHMARK(BM_multiply<multiply>)->Args({3, 4})->Args({4, 4})->Args({4, 6});
BENCHMARK(BM_multiply<multiply_serial>)->Args({3, 4})->Args({4, 4})->Args({4, 6});
BENCHMARK(BM_linked_approx<linked_approx>)->Arg(4)->Arg(6);
BENCHMARK(BM_linked_approx<linked_approx_serial>)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
