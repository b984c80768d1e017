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

#include "direction_search.hpp"

#include "stablepairs/errors.hpp"

namespace stablepairs::detail {

lp::LinearProgram direction_program(const LatticeContext& ctx, std::size_t extra) {
  const auto d = static_cast<std::size_t>(ctx.ambient_dim());
  lp::LinearProgram prog(d + extra);
  for (std::size_t i = 0; i < d; ++i) prog.add_bounds(i, Rational(-1), Rational(1));
  if (ctx.mode() == LatticeMode::sl) {
    RationalVector row(d + extra, Rational(0));
    for (std::size_t i = 0; i < d; ++i) row[i] = 1;
    prog.add_constraint(std::move(row), lp::Relation::equal, Rational(0));
  }
  return prog;
}

RationalVector zero_row(const lp::LinearProgram& prog) {
  return RationalVector(prog.num_vars(), Rational(0));
}

std::optional<OneParamSubgroup> sparsest_improving_direction(const lp::LinearProgram& prog,
                                                             std::size_t dim) {
  const auto first = lp::solve(prog);
  if (first.status == lp::Status::infeasible) return std::nullopt;
  if (first.status == lp::Status::unbounded) {
    throw InternalError("direction search is unbounded despite box normalization");
  }
  if (first.value <= 0) return std::nullopt;

  // Second stage: among optimal points minimize sum |lambda_i| via t_i >= |lambda_i|.
  const std::size_t n = prog.num_vars();
  lp::LinearProgram refined(n + dim);
  auto pad = [&](const RationalVector& row) {
    RationalVector out = row;
    out.resize(n + dim, Rational(0));
    return out;
  };
  for (const auto& c : prog.constraints()) refined.add_constraint(pad(c.coeffs), c.relation, c.rhs);
  for (std::size_t j = 0; j < n; ++j) {
    if (prog.is_nonnegative(j)) refined.require_nonnegative(j);
  }
  refined.add_constraint(pad(prog.objective()), lp::Relation::greater_equal, first.value);
  RationalVector cost(n + dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector upper(n + dim, Rational(0));
    upper[n + i] = 1;
    upper[i] = -1;
    refined.add_constraint(upper, lp::Relation::greater_equal, Rational(0));
    RationalVector lower(n + dim, Rational(0));
    lower[n + i] = 1;
    lower[i] = 1;
    refined.add_constraint(lower, lp::Relation::greater_equal, Rational(0));
    cost[n + i] = -1;
  }
  refined.maximize(std::move(cost));
  const auto second = lp::solve(refined);
  if (second.status != lp::Status::optimal) {
    throw InternalError("L1 refinement of an optimal direction failed");
  }
  const RationalVector lambda(second.point.begin(), second.point.begin() + static_cast<std::ptrdiff_t>(dim));
  return OneParamSubgroup(lp::rationalize_direction(lambda));
}

}  // namespace stablepairs::detail
