/*
   Copyright 2026 The bax Authors

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

#include <benchmark/benchmark.h>

#include "bax/baxterize.hpp"
#include "bax/double.hpp"
#include "bax/taft.hpp"
#include "bax/uqsl2.hpp"
#include "bax/ybe.hpp"

namespace {

void BM_TaftParametricYbe(benchmark::State& state) {
    const bax::TaftAlgebra t = bax::build_taft(4, bax::taft_root(4));
    const bax::ParamMatrix r = bax::taft_r_matrix(t, bax::rep_irreducible(t, 3, 1), true);
    for (auto _ : state) benchmark::DoNotOptimize(bax::check_parametric_ybe(r).passed);
}
BENCHMARK(BM_TaftParametricYbe)->Unit(benchmark::kMillisecond);

void BM_SpinOneParametricYbe(benchmark::State& state) {
    const bax::ParamMatrix r = bax::uqsl2_r_matrix(bax::spin_one(), true);
    for (auto _ : state) benchmark::DoNotOptimize(bax::check_parametric_ybe(r).passed);
}
BENCHMARK(BM_SpinOneParametricYbe)->Unit(benchmark::kMillisecond);

void BM_BuildDouble(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const bax::TaftAlgebra t = bax::build_taft(n, bax::taft_root(n));
    for (auto _ : state) benchmark::DoNotOptimize(bax::build_double(t.hopf).cross.size());
}
BENCHMARK(BM_BuildDouble)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_AlgebraicParametricYbe(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const bax::TaftAlgebra t = bax::build_taft(n, bax::taft_root(n));
    const bax::DrinfeldDouble d = bax::build_double(t.hopf);
    const bax::ParamTensor r = bax::to_double(d, bax::baxterize(bax::taft_graded_r(t)));
    for (auto _ : state) benchmark::DoNotOptimize(bax::check_parametric_ybe_algebraic(d, r).passed);
}
BENCHMARK(BM_AlgebraicParametricYbe)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
