// Copyright 2026 The Frobenia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "frobenia/charfn.hpp"
#include "frobenia/frobenius.hpp"
#include "frobenia/pq.hpp"
#include "frobenia/sympower.hpp"

using namespace frobenia;

namespace {

/// Deterministic dense map with small integer entries.
LinMap dense_map(const AlgebraPtr& a, const AlgebraPtr& b)
{
    Matrix m(b->dim(), a->dim());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = static_cast<long>((3 * i + 5 * j) % 7) - 3;
    return {a, b, std::move(m)};
}

std::vector<std::size_t> first_points(std::size_t n, std::size_t m)
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
        s.push_back(i % m);
    return s;
}

void BM_CharSeriesDirect(benchmark::State& state)
{
    const auto a = function_algebra(static_cast<std::size_t>(state.range(0)));
    const LinMap phi = dense_map(a, function_algebra(1));
    SymbolScope scope;
    const auto g = scope.generic(a, "a");
    for (auto _ : state)
        benchmark::DoNotOptimize(char_series_direct(phi, g, static_cast<std::size_t>(state.range(1))));
}
BENCHMARK(BM_CharSeriesDirect)->Args({2, 8})->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_CharSeriesNewton(benchmark::State& state)
{
    const auto a = function_algebra(static_cast<std::size_t>(state.range(0)));
    const LinMap phi = dense_map(a, function_algebra(1));
    SymbolScope scope;
    const auto g = scope.generic(a, "a");
    for (auto _ : state)
        benchmark::DoNotOptimize(char_series_newton(phi, g, static_cast<std::size_t>(state.range(1))));
}
BENCHMARK(BM_CharSeriesNewton)->Args({2, 8})->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_ClassifyEvSum(benchmark::State& state)
{
    const std::size_t m = 4, n = static_cast<std::size_t>(state.range(0));
    const LinMap phi = ev_pq(m, first_points(n, m), {});
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_n(phi, n + 1));
}
BENCHMARK(BM_ClassifyEvSum)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Hankel(benchmark::State& state)
{
    const std::size_t p = static_cast<std::size_t>(state.range(0)), q = static_cast<std::size_t>(state.range(1));
    const LinMap phi = ev_pq(4, first_points(p, 4), first_points(q, 4));
    for (auto _ : state)
        benchmark::DoNotOptimize(hankel_check(phi, p, q, static_cast<std::int64_t>(p + q + 3)));
}
BENCHMARK(BM_Hankel)->Args({1, 1})->Args({2, 2})->Args({0, 4})->Unit(benchmark::kMillisecond);

void BM_SymPower(benchmark::State& state)
{
    const auto a = function_algebra(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(sym_power(a, static_cast<std::size_t>(state.range(1))));
}
BENCHMARK(BM_SymPower)->Args({3, 2})->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_LiftAndVerify(benchmark::State& state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const LinMap phi = ev_pq(3, first_points(n, 3), {});
    const auto c = classify_n(phi, n);
    const auto sp = sym_power(phi.domain(), n);
    for (auto _ : state) {
        const LinMap f = beta(sp, *c.certified);
        benchmark::DoNotOptimize(verify_det_identity(sp, f, phi));
    }
}
BENCHMARK(BM_LiftAndVerify)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_SymPqPower(benchmark::State& state)
{
    const auto a = function_algebra(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(sym_pq_power(a, static_cast<std::size_t>(state.range(1)), 1));
}
BENCHMARK(BM_SymPqPower)->Args({2, 1})->Args({3, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
