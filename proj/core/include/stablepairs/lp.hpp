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
#include <span>
#include <vector>

#include "stablepairs/rational.hpp"

// Exact rational linear programming.
//
// Variables are unrestricted in sign unless marked nonnegative; other bounds
// are ordinary constraints.
// The solver is a two-phase dense tableau simplex with Bland's rule, so it
// terminates on every input and is deterministic bit-for-bit.
namespace stablepairs::lp {

enum class Relation { less_equal, equal, greater_equal };
enum class Sense { maximize, feasibility };

struct Constraint {
  RationalVector coeffs;
  Relation relation;
  Rational rhs;
};

class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars);
  LinearProgram(std::size_t num_vars, std::vector<Constraint> constraints,
                RationalVector objective, Sense sense);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const RationalVector& objective() const { return objective_; }
  Sense sense() const { return sense_; }

  void add_constraint(RationalVector coeffs, Relation relation, Rational rhs);
  /// lower <= x_var <= upper.
  void add_bounds(std::size_t var, const Rational& lower, const Rational& upper);
  void maximize(RationalVector objective);
  void require_nonnegative(std::size_t var);
  bool is_nonnegative(std::size_t var) const { return nonnegative_[var]; }

 private:
  std::size_t num_vars_;
  std::vector<Constraint> constraints_;
  RationalVector objective_;
  std::vector<bool> nonnegative_;
  Sense sense_ = Sense::feasibility;
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
  Status status = Status::infeasible;
  /// Optimal objective value (0 for feasibility problems).
  Rational value;
  /// An optimal point; the last feasible vertex when unbounded.
  RationalVector point;
  /// When unbounded: a feasible direction along which the objective increases.
  RationalVector ray;
};

Solution solve(const LinearProgram& lp);

/// True iff `point` satisfies every constraint of `lp` exactly.
bool satisfies(const LinearProgram& lp, std::span<const Rational> point);

/// The primitive integer vector that is a positive multiple of `point`.
/// Throws InputError for the zero vector.
std::vector<std::int64_t> rationalize_direction(std::span<const Rational> point);

}  // namespace stablepairs::lp
