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

#include "stablepairs/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "stablepairs/errors.hpp"
#include "stablepairs/polytope.hpp"

namespace stablepairs {

namespace {

template <typename Coords>
std::string format_coords(const Coords& coords) {
  std::string out = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + "]";
}

}  // namespace

LatticeContext LatticeContext::free_torus(int rank) {
  if (rank < 1) throw InputError("free torus rank must be positive");
  return {LatticeMode::free, rank};
}

LatticeContext LatticeContext::special_linear(int matrix_size) {
  if (matrix_size < 1) throw InputError("matrix size must be positive");
  return {LatticeMode::sl, matrix_size};
}

std::optional<int> LatticeContext::rank() const {
  if (mode_ == LatticeMode::free) return dim_;
  return std::nullopt;
}

std::optional<int> LatticeContext::matrix_size() const {
  if (mode_ == LatticeMode::sl) return dim_;
  return std::nullopt;
}

bool OneParamSubgroup::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

std::string to_string(const Weight& a) { return format_coords(a.coords()); }
std::string to_string(const OneParamSubgroup& lam) { return format_coords(lam.coords()); }

void check_weight(const LatticeContext& ctx, const Weight& a) {
  if (static_cast<int>(a.size()) != ctx.ambient_dim()) {
    throw InputError("weight " + to_string(a) + " has dimension " + std::to_string(a.size()) +
                     ", expected " + std::to_string(ctx.ambient_dim()));
  }
}

void check_subgroup(const LatticeContext& ctx, const OneParamSubgroup& lam, bool nonzero) {
  if (static_cast<int>(lam.size()) != ctx.ambient_dim()) {
    throw InputError("one-parameter subgroup " + to_string(lam) + " has dimension " +
                     std::to_string(lam.size()) + ", expected " +
                     std::to_string(ctx.ambient_dim()));
  }
  if (ctx.mode() == LatticeMode::sl) {
    const auto c = lam.coords();
    if (std::accumulate(c.begin(), c.end(), std::int64_t{0}) != 0) {
      throw InputError("one-parameter subgroup " + to_string(lam) +
                       " of SL must have zero coordinate sum");
    }
  }
  if (nonzero && lam.is_zero()) throw InputError("one-parameter subgroup must be nonzero");
}

std::int64_t pair(const OneParamSubgroup& lam, const Weight& a) {
  if (lam.size() != a.size()) {
    throw InputError("dimension mismatch pairing " + to_string(lam) + " with " + to_string(a));
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += lam[i] * a[i];
  return sum;
}

Rational pair(const OneParamSubgroup& lam, std::span<const Rational> y) {
  return dot(lam.coords(), y);
}

RationalVector project_sl(const LatticeContext& ctx, const Weight& a) {
  if (ctx.mode() != LatticeMode::sl) throw ModeError("project_sl requires an sl-mode context");
  check_weight(ctx, a);
  const auto c = a.coords();
  const Rational mean(std::accumulate(c.begin(), c.end(), std::int64_t{0}), ctx.ambient_dim());
  RationalVector out;
  out.reserve(c.size());
  for (auto x : c) out.push_back(Rational(x) - mean);
  return out;
}

RationalPolytope standard_simplex(const LatticeContext& ctx, std::int64_t k) {
  if (ctx.mode() != LatticeMode::sl) throw ModeError("standard_simplex requires an sl-mode context");
  if (k <= 0) throw InputError("simplex scale must be positive");
  const int n = ctx.ambient_dim();
  std::vector<RationalVector> vertices;
  for (int i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = k;
    vertices.push_back(std::move(e));
  }
  return RationalPolytope(std::move(vertices));
}

}  // namespace stablepairs
