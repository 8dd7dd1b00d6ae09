#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hyperfield/hyper.hpp"
#include "hyperfield/limits.hpp"
#include "hyperfield/monads.hpp"

using namespace hyperfield;

namespace {

// mirrors the test generator, kept local so benchmarks build standalone
struct Rng {
    std::mt19937_64 eng{0xbe9cbe9cULL};

    int range(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }

    GPoly gpoly() {
        std::vector<Term> terms;
        int k = range(0, 4);
        for (int i = 0; i < k; ++i)
            terms.push_back({Rational(range(-3, 3), range(1, 3)),
                             Rational(range(-1000, 1000), range(1, 10))});
        return GPoly(std::move(terms));
    }

    GPoly nonzero_gpoly() {
        while (true) {
            GPoly p = gpoly();
            if (!p.is_zero()) return p;
        }
    }

    Hyper hyper() { return Hyper(gpoly(), nonzero_gpoly()); }
};

std::vector<Hyper> pool(int n) {
    Rng rng;
    std::vector<Hyper> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(rng.hyper());
    return out;
}

void bench_mul(benchmark::State& state) {
    auto xs = pool(64);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xs[i % 64] * xs[(i + 1) % 64]);
        ++i;
    }
}
BENCHMARK(bench_mul);

void bench_add(benchmark::State& state) {
    auto xs = pool(64);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xs[i % 64] + xs[(i + 1) % 64]);
        ++i;
    }
}
BENCHMARK(bench_add);

void bench_compare(benchmark::State& state) {
    auto xs = pool(64);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compare(xs[i % 64], xs[(i + 1) % 64]));
        ++i;
    }
}
BENCHMARK(bench_compare);

void bench_decompose(benchmark::State& state) {
    auto xs = pool(64);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(xs[i % 64]));
        ++i;
    }
}
BENCHMARK(bench_decompose);

void bench_epsilon_index(benchmark::State& state) {
    Hyper w = Hyper::omega();
    Hyper x = w / (w + Hyper::from_rational(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(epsilon_index(x, 1, Rational(1, 100)));
}
BENCHMARK(bench_epsilon_index);

}  // namespace

BENCHMARK_MAIN();
