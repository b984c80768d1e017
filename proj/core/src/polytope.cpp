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

#include "stablepairs/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "stablepairs/errors.hpp"
#include "stablepairs/lp.hpp"

namespace stablepairs {

namespace {

std::size_t common_dim(const std::vector<RationalVector>& points) {
  if (points.empty()) throw InputError("polytope needs at least one point");
  const std::size_t d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) throw InputError("polytope points have mixed dimensions");
  }
  return d;
}

void sort_unique(std::vector<RationalVector>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

// Is y a convex combination of `generators`? Variables are the barycentric
// weights mu_j >= 0 with sum 1.
bool in_convex_hull(const std::vector<RationalVector>& generators, std::span<const Rational> y,
                    std::optional<std::size_t> skip = std::nullopt) {
  std::vector<const RationalVector*> gens;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (skip && *skip == j) continue;
    gens.push_back(&generators[j]);
  }
  if (gens.empty()) return false;
  if (gens.size() == 1) return std::equal(y.begin(), y.end(), gens.front()->begin());

  const std::size_t k = gens.size();
  lp::LinearProgram prog(k);
  for (std::size_t i = 0; i < y.size(); ++i) {
    RationalVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = (*gens[j])[i];
    prog.add_constraint(std::move(row), lp::Relation::equal, y[i]);
  }
  prog.add_constraint(RationalVector(k, Rational(1)), lp::Relation::equal, Rational(1));
  for (std::size_t j = 0; j < k; ++j) prog.require_nonnegative(j);
  return lp::solve(prog).status == lp::Status::optimal;
}

}  // namespace

std::vector<RationalVector> hull_vertices(std::vector<RationalVector> points) {
  common_dim(points);
  sort_unique(points);
  if (points.size() <= 2) return points;
  std::vector<RationalVector> vertices;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!in_convex_hull(points, points[i], i)) vertices.push_back(points[i]);
  }
  return vertices;
}

RationalPolytope::RationalPolytope(std::vector<RationalVector> points)
    : dim_(common_dim(points)), points_(std::move(points)) {
  sort_unique(points_);
  vertices_ = hull_vertices(points_);
}

RationalPolytope::RationalPolytope(Trusted, std::vector<RationalVector> points,
                                   std::vector<RationalVector> vertices)
    : dim_(points.front().size()), points_(std::move(points)), vertices_(std::move(vertices)) {}

RationalPolytope RationalPolytope::scaled(const Rational& k) const {
  if (k < 0) throw InputError("polytope scale must be nonnegative");
  if (is_zero(k)) return RationalPolytope({RationalVector(dim_, Rational(0))});
  auto scale_all = [&](const std::vector<RationalVector>& src) {
    std::vector<RationalVector> out = src;
    for (auto& p : out) {
      for (auto& x : p) x *= k;
    }
    return out;
  };
  return RationalPolytope(Trusted{}, scale_all(points_), scale_all(vertices_));
}

Rational support_value(const RationalPolytope& p, std::span<const Rational> x) {
  if (x.size() != p.dim()) throw InputError("support_value: dimension mismatch");
  const auto& vs = p.vertices();
  Rational best = dot(x, vs.front());
  for (std::size_t i = 1; i < vs.size(); ++i) best = std::max(best, dot(x, vs[i]));
  return best;
}

Rational support_value(const RationalPolytope& p, std::span<const std::int64_t> x) {
  if (x.size() != p.dim()) throw InputError("support_value: dimension mismatch");
  const auto& vs = p.vertices();
  Rational best = dot(x, vs.front());
  for (std::size_t i = 1; i < vs.size(); ++i) best = std::max(best, dot(x, vs[i]));
  return best;
}

RationalPolytope minkowski_combine(const RationalPolytope& p, const RationalPolytope& q,
                                   const Rational& s, const Rational& t) {
  if (s < 0 || t < 0) throw InputError("Minkowski coefficients must be nonnegative");
  if (p.dim() != q.dim()) throw InputError("Minkowski combination: dimension mismatch");
  std::vector<RationalVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      RationalVector c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i] + t * b[i];
      sums.push_back(std::move(c));
    }
  }
  return RationalPolytope(std::move(sums));
}

bool contains_point(const RationalPolytope& p, std::span<const Rational> y) {
  if (y.size() != p.dim()) throw InputError("contains_point: dimension mismatch");
  return in_convex_hull(p.vertices(), y);
}

Inclusion includes(const RationalPolytope& p, const RationalPolytope& q) {
  if (p.dim() != q.dim()) throw InputError("includes: dimension mismatch");
  for (const auto& v : q.vertices()) {
    if (!contains_point(p, v)) return {false, v};
  }
  return {true, std::nullopt};
}

bool simplex_contains(const Weight& a, std::int64_t k, const LatticeContext& ctx) {
  if (ctx.mode() != LatticeMode::sl) throw ModeError("simplex_contains requires an sl-mode context");
  if (k <= 0) throw InputError("simplex scale must be positive");
  check_weight(ctx, a);
  const auto c = a.coords();
  const Rational shift(k - std::accumulate(c.begin(), c.end(), std::int64_t{0}), ctx.ambient_dim());
  return std::all_of(c.begin(), c.end(), [&](auto x) { return Rational(x) + shift >= 0; });
}

}  // namespace stablepairs
