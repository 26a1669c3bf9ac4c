// Copyright 2026 The cmnash Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "cmnash/classify.hpp"
#include "cmnash/indifference.hpp"
#include "cmnash/lp.hpp"
#include "cmnash/oracle.hpp"
#include "cmnash/sampler.hpp"

namespace {

using namespace cmnash;

std::vector<GameMatrix> make_games(int n, int m, int count, bool symmetric) {
  SplitMix64 rng(12345);
  std::vector<GameMatrix> games;
  games.reserve(count);
  for (int k = 0; k < count; ++k) {
    games.push_back(random_game(rng, n, m, 10, symmetric));
  }
  return games;
}

void BM_SolveIndifference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto games = make_games(n, n, 64, false);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        indifference::solve_indifference(games[i++ % games.size()]));
  }
}
BENCHMARK(BM_SolveIndifference)->Arg(2)->Arg(3)->Arg(5);

void BM_HalfSpaceCover(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto games = make_games(n, n, 64, false);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(indifference::half_space_cover(
        indifference::difference_matrix(games[i++ % games.size()])));
  }
}
BENCHMARK(BM_HalfSpaceCover)->Arg(2)->Arg(3)->Arg(5);

void BM_Classify(benchmark::State& state) {
  const auto games = make_games(3, 3, 256, true);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify::classify(games[i++ % games.size()]));
  }
}
BENCHMARK(BM_Classify);

void BM_SymmetricEquilibria(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto games = make_games(n, n, 64, true);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle::symmetric_equilibria(games[i++ % games.size()]));
  }
}
BENCHMARK(BM_SymmetricEquilibria)->Arg(2)->Arg(3)->Arg(4);

void BM_FarkasAlternative(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto games = make_games(n, n, 64, false);
  std::size_t i = 0;
  for (auto _ : state) {
    const GameMatrix& g = games[i++ % games.size()];
    const auto aug = indifference::augment(indifference::difference_matrix(g));
    lp::LinearSystem sys{aug.dbar, aug.b,
                         std::vector<bool>(g.cols(), true)};
    benchmark::DoNotOptimize(
        lp::solve_feasibility(lp::farkas_alternative(sys)));
  }
}
BENCHMARK(BM_FarkasAlternative)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
