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
#include <optional>
#include <span>
#include <vector>

#include "stablepairs/lattice.hpp"
#include "stablepairs/rational.hpp"

namespace stablepairs {

/// Convex hull of finitely many rational points, kept in V-representation.
///
/// Points are deduplicated and sorted lexicographically; the extreme points
/// are identified exactly at construction. Lower-dimensional hulls (points,
/// segments, flat polygons) are handled like any other.
class RationalPolytope {
 public:
  explicit RationalPolytope(std::vector<RationalVector> points);

  std::size_t dim() const { return dim_; }
  const std::vector<RationalVector>& points() const { return points_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }

  /// k * P for k > 0 (k = 0 collapses to the origin).
  RationalPolytope scaled(const Rational& k) const;

 private:
  struct Trusted {};
  RationalPolytope(Trusted, std::vector<RationalVector> points, std::vector<RationalVector> vertices);

  std::size_t dim_ = 0;
  std::vector<RationalVector> points_;
  std::vector<RationalVector> vertices_;
};

/// Extreme points of the hull, deduplicated, in lexicographic order.
std::vector<RationalVector> hull_vertices(std::vector<RationalVector> points);

/// max over y in P of <x, y>.
Rational support_value(const RationalPolytope& p, std::span<const Rational> x);
Rational support_value(const RationalPolytope& p, std::span<const std::int64_t> x);

/// hull{ s p + t q : p in P, q in Q } for s, t >= 0.
RationalPolytope minkowski_combine(const RationalPolytope& p, const RationalPolytope& q,
                                   const Rational& s, const Rational& t);

/// Exact membership of y in P (LP feasibility of a convex combination).
bool contains_point(const RationalPolytope& p, std::span<const Rational> y);

struct Inclusion {
  bool holds = true;
  /// A vertex of the inner polytope outside the outer one, when !holds.
  std::optional<RationalVector> witness;

  explicit operator bool() const { return holds; }
};

/// Whether Q is a subset of P.
Inclusion includes(const RationalPolytope& p, const RationalPolytope& q);

/// Whether the diagonal coset a + Z(1,...,1) meets k times the standard
/// simplex. Closed form; sl mode only.
bool simplex_contains(const Weight& a, std::int64_t k, const LatticeContext& ctx);

}  // namespace stablepairs
