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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "stablepairs/stability.hpp"

// The golden fixtures shared by unit and acceptance tests.
namespace stablepairs::testing {

inline RationalPolytope rational_polytope(std::initializer_list<std::initializer_list<std::int64_t>> pts) {
  std::vector<RationalVector> out;
  for (const auto& p : pts) {
    RationalVector v;
    for (auto x : p) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return RationalPolytope(std::move(out));
}

inline WeightSupport support(const LatticeContext& ctx, std::vector<Weight> weights) {
  return WeightSupport(ctx, std::move(weights));
}

/// Triangle hull{(1,0),(0,1),(-1,-1)}: the projected 2-simplex shape, origin inside.
inline RationalPolytope triangle_identity() { return rational_polytope({{1, 0}, {0, 1}, {-1, -1}}); }

/// sl(2): A(v) = the identity's weights, A(w) twice them; stable with m = 1.
inline PairInstance fix_a() {
  const auto ctx = LatticeContext::special_linear(2);
  return PairInstance(support(ctx, {{1, 0}, {0, 1}}), support(ctx, {{2, 0}, {0, 2}}), 1);
}

/// Free rank 2: A(v) = {0}, A(w) = unit diamond; stable with m = 2.
inline PairInstance fix_b() {
  const auto ctx = LatticeContext::free_torus(2);
  return PairInstance(support(ctx, {{0, 0}}), support(ctx, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), 1,
                      triangle_identity());
}

/// Free rank 2: A(v) = A(w) = {(+-1, 0)}, N(I) the square; semistable, not stable.
inline PairInstance fix_c() {
  const auto ctx = LatticeContext::free_torus(2);
  return PairInstance(support(ctx, {{-1, 0}, {1, 0}}), support(ctx, {{-1, 0}, {1, 0}}), 1,
                      rational_polytope({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
}

/// Free rank 2: A(v) = {(1,0)}, A(w) = {0}; unstable.
inline PairInstance fix_d() {
  const auto ctx = LatticeContext::free_torus(2);
  return PairInstance(support(ctx, {{1, 0}}), support(ctx, {{0, 0}}), 1, triangle_identity());
}

inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Weight random_weight(std::mt19937_64& rng, int dim, std::int64_t max_coord) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(dim));
  for (auto& x : c) x = uniform_int(rng, -max_coord, max_coord);
  return Weight(std::move(c));
}

inline std::vector<Weight> random_weights(std::mt19937_64& rng, int dim, std::int64_t max_coord,
                                          std::size_t count) {
  std::vector<Weight> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_weight(rng, dim, max_coord));
  return out;
}

inline OneParamSubgroup random_subgroup(std::mt19937_64& rng, const LatticeContext& ctx,
                                        std::int64_t max_coord) {
  const auto d = static_cast<std::size_t>(ctx.ambient_dim());
  for (;;) {
    std::vector<std::int64_t> c(d);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = uniform_int(rng, -max_coord, max_coord);
      sum += c[i];
    }
    if (ctx.mode() == LatticeMode::sl) c[d - 1] -= sum;
    OneParamSubgroup lam(std::move(c));
    if (!lam.is_zero()) return lam;
  }
}

// Least k >= 1 with N(v) inside k N(I); the construction invariant of PairInstance.
inline std::int64_t least_containing_scale(const RationalPolytope& identity, const RationalPolytope& nv) {
  std::int64_t k = 1;
  while (!includes(identity.scaled(Rational(k)), nv)) ++k;
  return k;
}

// Simplex hull{e_1, ..., e_d, -(1, ..., 1)}: origin in the interior.
inline RationalPolytope free_simplex(int dim) {
  std::vector<RationalVector> pts;
  for (int i = 0; i < dim; ++i) {
    RationalVector e(static_cast<std::size_t>(dim), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(e));
  }
  pts.emplace_back(static_cast<std::size_t>(dim), Rational(-1));
  return RationalPolytope(std::move(pts));
}

// Random instance; w is often a superset of v so that semistable cases are common.
inline PairInstance random_instance(std::mt19937_64& rng, const LatticeContext& ctx, std::int64_t max_coord) {
  const int d = ctx.ambient_dim();
  auto av = random_weights(rng, d, max_coord, static_cast<std::size_t>(uniform_int(rng, 1, 3)));
  auto aw = random_weights(rng, d, max_coord, static_cast<std::size_t>(uniform_int(rng, 1, 4)));
  if (uniform_int(rng, 0, 2) > 0) aw.insert(aw.end(), av.begin(), av.end());
  WeightSupport v(ctx, std::move(av));
  WeightSupport w(ctx, std::move(aw));
  const std::int64_t slack = uniform_int(rng, 0, 1);
  if (ctx.mode() == LatticeMode::sl) {
    const auto q = deg_of_V(v) + slack;
    return PairInstance(std::move(v), std::move(w), q);
  }
  auto identity = free_simplex(d);
  const auto q = least_containing_scale(identity, v.polytope()) + slack;
  return PairInstance(std::move(v), std::move(w), q, std::move(identity));
}

}  // namespace stablepairs::testing
