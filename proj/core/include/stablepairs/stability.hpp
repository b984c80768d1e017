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
#include <vector>

#include "stablepairs/lattice.hpp"
#include "stablepairs/polytope.hpp"
#include "stablepairs/rational.hpp"

namespace stablepairs {

/// The set A(v) of torus weights on which a vector has nonzero components.
///
/// Duplicates are dropped (first occurrence wins, order otherwise kept).
/// points() are the working coordinates used for all convex geometry: the
/// weights themselves in free mode, their trace-zero projections in sl mode.
class WeightSupport {
 public:
  WeightSupport(LatticeContext ctx, std::vector<Weight> weights);

  const LatticeContext& context() const { return ctx_; }
  const std::vector<Weight>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<RationalVector>& points() const { return points_; }
  /// The weight polytope N(v).
  const RationalPolytope& polytope() const { return polytope_; }

 private:
  LatticeContext ctx_;
  std::vector<Weight> weights_;
  std::vector<RationalVector> points_;
  RationalPolytope polytope_;
};

/// Working coordinates of a single weight (see WeightSupport::points).
RationalVector working_point(const LatticeContext& ctx, const Weight& a);

/// One frame of a stability problem: supports of v and w, q = deg(V), and N(I).
///
/// In sl mode N(I) is always the projected standard simplex and must not be
/// passed; in free mode it is required and must contain the origin. The
/// constructor rejects instances with N(v) not inside q N(I).
class PairInstance {
 public:
  PairInstance(WeightSupport v, WeightSupport w, std::int64_t q,
               std::optional<RationalPolytope> identity = std::nullopt);

  const LatticeContext& context() const { return v_.context(); }
  const WeightSupport& v() const { return v_; }
  const WeightSupport& w() const { return w_; }
  std::int64_t q() const { return q_; }
  /// N(I) in working coordinates.
  const RationalPolytope& identity() const { return identity_; }
  /// q N(I) in working coordinates.
  const RationalPolytope& scaled_identity() const { return scaled_identity_; }

 private:
  WeightSupport v_;
  WeightSupport w_;
  std::int64_t q_;
  RationalPolytope identity_;
  RationalPolytope scaled_identity_;
};

/// A finite list of frames conjoined into one group-level verdict.
class FrameFamily {
 public:
  explicit FrameFamily(std::vector<PairInstance> frames);

  const std::vector<PairInstance>& frames() const { return frames_; }

 private:
  std::vector<PairInstance> frames_;
};

enum class Clause { semistability, stability };

struct Decision {
  bool holds = true;
  /// Certifying one-parameter subgroup when !holds.
  std::optional<OneParamSubgroup> witness;
  /// Which clause the witness violates.
  std::optional<Clause> violated;

  explicit operator bool() const { return holds; }
};

struct StabilityVerdict {
  bool semistable = false;
  bool stable = false;
  std::optional<std::int64_t> uniform_m;
  std::optional<OneParamSubgroup> witness;
  std::optional<Clause> violated;
  std::optional<std::size_t> frame_index;
};

/// w_lambda(v) = min over a in A of <lambda, a>.
std::int64_t weight(const OneParamSubgroup& lam, const WeightSupport& support);

/// w_lambda(I) = min over the vertices of N(I) of <lambda, p>. Rational in
/// free mode when N(I) has rational vertices.
Rational identity_weight(const OneParamSubgroup& lam, const PairInstance& p);

/// deg(V): the least k >= 1 whose scaled simplex meets the diagonal coset of
/// every weight of the representation. sl mode only.
std::int64_t deg_of_V(const WeightSupport& all_rep_weights);

/// N(v) inside N(w); otherwise a lambda with w_lambda(w) > w_lambda(v).
Decision is_semistable(const PairInstance& p);

/// Semistable, and w_lambda(w) < w_lambda(v) whenever q w_lambda(I) < w_lambda(v).
///
/// For every vertex u of N(v) and every vertex p of q N(I) an LP over the
/// box-normalized lambda asks for u and p to be the minimizers of lambda on
/// N(v) and q N(I), for w_lambda(w) >= <lambda, u>, and maximizes
/// <lambda, u - p>. A positive optimum is a violating direction.
Decision is_stable(const PairInstance& p);

/// Whether (1 - 1/m) N(v) + (1/m) q N(I) lies inside N(w).
bool uniform_inclusion_holds(const PairInstance& p, std::int64_t m);

/// Least m >= 1 with uniform_inclusion_holds, or nullopt when not stable.
std::optional<std::int64_t> minimal_uniform_m(const PairInstance& p);

/// m (w_lambda(v) - w_lambda(w)) >= w_lambda(v) - q w_lambda(I).
bool check_tian0(const PairInstance& p, std::int64_t m, const OneParamSubgroup& lam);

StabilityVerdict verdict(const FrameFamily& family);

}  // namespace stablepairs
