// Copyright 2026 The stablepairs Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "stablepairs/lp.hpp"
#include "stablepairs/polytope.hpp"
#include "stablepairs/stability.hpp"

namespace sp = stablepairs;

namespace {

std::vector<sp::RationalVector> cloud(std::mt19937_64& rng, int dim, int n, int max_coord) {
  std::uniform_int_distribution<int> coord(-max_coord, max_coord);
  std::vector<sp::RationalVector> pts;
  for (int i = 0; i < n; ++i) {
    sp::RationalVector p(static_cast<std::size_t>(dim));
    for (auto& x : p) x = coord(rng);
    pts.push_back(std::move(p));
  }
  return pts;
}

// max c.x over a random box-bounded system with m rows.
void BM_LpSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> coef(-5, 5);
  sp::lp::LinearProgram prog(n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    sp::RationalVector row(n);
    for (auto& x : row) x = coef(rng);
    prog.add_constraint(std::move(row), sp::lp::Relation::less_equal, 10);
  }
  for (std::size_t j = 0; j < n; ++j) prog.add_bounds(j, -3, 3);
  sp::RationalVector c(n);
  for (auto& x : c) x = coef(rng);
  prog.maximize(std::move(c));
  for (auto _ : state) benchmark::DoNotOptimize(sp::lp::solve(prog));
}
BENCHMARK(BM_LpSolve)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_HullVertices(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto pts = cloud(rng, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(sp::hull_vertices(pts));
}
BENCHMARK(BM_HullVertices)->Args({2, 10})->Args({2, 40})->Args({3, 20})->Args({4, 20});

sp::PairInstance diamond_pair(int dim, std::int64_t radius) {
  const auto ctx = sp::LatticeContext::free_torus(dim);
  std::vector<sp::Weight> w;
  std::vector<sp::RationalVector> identity;
  for (int i = 0; i < dim; ++i) {
    for (std::int64_t s : {radius, -radius}) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(dim), 0);
      e[static_cast<std::size_t>(i)] = s;
      w.emplace_back(std::move(e));
    }
    sp::RationalVector e(static_cast<std::size_t>(dim), sp::Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    identity.push_back(std::move(e));
  }
  identity.emplace_back(static_cast<std::size_t>(dim), sp::Rational(-1));
  return sp::PairInstance(sp::WeightSupport(ctx, {sp::Weight(std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0))}),
                          sp::WeightSupport(ctx, std::move(w)), 1, sp::RationalPolytope(std::move(identity)));
}

void BM_IsStable(benchmark::State& state) {
  const auto p = diamond_pair(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sp::is_stable(p));
}
BENCHMARK(BM_IsStable)->Arg(2)->Arg(3)->Arg(4);

void BM_MinimalUniformM(benchmark::State& state) {
  const auto p = diamond_pair(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sp::minimal_uniform_m(p));
}
BENCHMARK(BM_MinimalUniformM)->Arg(2)->Arg(3)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
