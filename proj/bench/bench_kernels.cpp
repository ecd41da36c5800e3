/*
   Copyright 2026 The z2dc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "z2dc/catalog.hpp"
#include "z2dc/kernels.hpp"

namespace {

using z2dc::kernels::PackedWord;

std::vector<PackedWord> random_rows(int count) {
    std::mt19937_64 rng(7);
    std::vector<PackedWord> rows(static_cast<std::size_t>(count));
    for (auto& w : rows) w = rng() & ((PackedWord{1} << 40) - 1);
    return rows;
}

template <bool Parallel>
void BM_SpanWords(benchmark::State& state) {
    const auto rows = random_rows(static_cast<int>(state.range(0)));
    std::vector<PackedWord> out(std::size_t{1} << rows.size());
    for (auto _ : state) {
        if constexpr (Parallel) {
            z2dc::kernels::span_words(rows, out);
        } else {
            z2dc::kernels::serial::span_words(rows, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

template <bool Parallel>
void BM_MinWeight(benchmark::State& state) {
    const auto rows = random_rows(static_cast<int>(state.range(0)));
    std::vector<PackedWord> words(std::size_t{1} << rows.size());
    z2dc::kernels::serial::span_words(rows, words);
    for (auto _ : state) {
        auto d = Parallel ? z2dc::kernels::min_weight(words) : z2dc::kernels::serial::min_weight(words);
        benchmark::DoNotOptimize(d);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}

template <bool Parallel>
void BM_Catalog(benchmark::State& state) {
    z2dc::catalog::CatalogOptions options;
    options.parallel = Parallel;
    const int r = static_cast<int>(state.range(0)), s = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto entries = z2dc::catalog::enumerate_codes(r, s, options);
        benchmark::DoNotOptimize(entries.data());
    }
}

BENCHMARK(BM_SpanWords<false>)->Name("span_words/serial")->Arg(16)->Arg(20);
BENCHMARK(BM_SpanWords<true>)->Name("span_words/omp")->Arg(16)->Arg(20);
BENCHMARK(BM_MinWeight<false>)->Name("min_weight/serial")->Arg(16)->Arg(20);
BENCHMARK(BM_MinWeight<true>)->Name("min_weight/omp")->Arg(16)->Arg(20);
BENCHMARK(BM_Catalog<false>)->Name("catalog/serial")->Args({6, 6})->Args({8, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Catalog<true>)->Name("catalog/omp")->Args({6, 6})->Args({8, 8})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
