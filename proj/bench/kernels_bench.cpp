/*
 * Copyright 2026 The braidrep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference kernels against the OpenMP ones on the matrices the
// library actually produces: LK images of braid words and their
// determinant inputs det(k_n(w) - I).
//
//   braidrep_bench --benchmark_filter=Det

#include "braidrep/braid.hpp"
#include "braidrep/kernels.hpp"
#include "braidrep/reps.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <random>

using namespace braidrep;

namespace {

// fixed pseudo-random word, same for every backend
BraidWord bench_word(int n, int len) {
    std::mt19937 rng(static_cast<unsigned>(n * 1000 + len));
    std::uniform_int_distribution<int> idx(1, n - 1), sgn(0, 3);
    std::vector<int> w;
    for (int i = 0; i < len; ++i) w.push_back(sgn(rng) == 0 ? -idx(rng) : idx(rng));
    return BraidWord::from_indices(n, w);
}

const PolyMatrix& lk_image(int n, int len) {
    static std::map<std::pair<int, int>, PolyMatrix> cache;
    auto key = std::make_pair(n, len);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, image_of_word(lk(n), bench_word(n, len))).first;
    return it->second;
}

kernels::Backend backend(const benchmark::State& s) {
    return s.range(2) ? kernels::Backend::Parallel : kernels::Backend::Serial;
}

void Multiply(benchmark::State& s) {
    int n = static_cast<int>(s.range(0)), len = static_cast<int>(s.range(1));
    const PolyMatrix& a = lk_image(n, len);
    const PolyMatrix& b = lk_image(n, len + 1);
    for (auto _ : s) benchmark::DoNotOptimize(kernels::multiply(a, b, backend(s)));
    s.SetLabel(std::to_string(a.rows()) + "x" + std::to_string(a.rows()) +
               (s.range(2) ? " parallel" : " serial"));
}

void Det(benchmark::State& s) {
    int n = static_cast<int>(s.range(0)), len = static_cast<int>(s.range(1));
    PolyMatrix a = lk_image(n, len) - PolyMatrix::identity(lk_image(n, len).rows());
    for (auto _ : s) benchmark::DoNotOptimize(kernels::bareiss_determinant(a, backend(s)));
    s.SetLabel(std::to_string(a.rows()) + "x" + std::to_string(a.rows()) +
               (s.range(2) ? " parallel" : " serial"));
}

void Inverse(benchmark::State& s) {
    int n = static_cast<int>(s.range(0)), len = static_cast<int>(s.range(1));
    const PolyMatrix& a = lk_image(n, len);
    for (auto _ : s) benchmark::DoNotOptimize(kernels::gauss_jordan(a, backend(s)));
    s.SetLabel(std::to_string(a.rows()) + "x" + std::to_string(a.rows()) +
               (s.range(2) ? " parallel" : " serial"));
}

} // namespace

// args: strands, word length, backend (0 serial, 1 parallel)
BENCHMARK(Multiply)->ArgsProduct({{5, 7, 9}, {6}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(Det)->ArgsProduct({{4, 5, 6}, {4}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(Inverse)->ArgsProduct({{4, 5}, {3}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
