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

#include "stablepairs/degeneration.hpp"

#include <algorithm>

#include "direction_search.hpp"
#include "stablepairs/errors.hpp"

namespace stablepairs {

DegenerationProblem::DegenerationProblem(WeightSupport support, std::vector<std::size_t> keep)
    : support_(std::move(support)), keep_(std::move(keep)) {
  if (keep_.empty()) throw InputError("keep set must be nonempty");
  std::sort(keep_.begin(), keep_.end());
  keep_.erase(std::unique(keep_.begin(), keep_.end()), keep_.end());
  if (keep_.back() >= support_.size()) {
    throw InputError("keep index " + std::to_string(keep_.back()) + " out of range for " +
                     std::to_string(support_.size()) + " weights");
  }
}

std::optional<OneParamSubgroup> find_degeneration(const DegenerationProblem& problem) {
  const auto& support = problem.support();
  const auto& ctx = support.context();
  const auto d = static_cast<std::size_t>(ctx.ambient_dim());
  const auto& keep = problem.keep();
  const auto& weights = support.weights();
  const bool drops_something = keep.size() < weights.size();

  // Variables: lambda (d), mu = common value on kept weights, s = least slack
  // on dropped weights.
  auto prog = detail::direction_program(ctx, 2);
  const std::size_t mu = d;
  const std::size_t slack = d + 1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    RationalVector row = detail::zero_row(prog);
    for (std::size_t k = 0; k < d; ++k) row[k] = weights[i][k];
    row[mu] = -1;
    if (std::binary_search(keep.begin(), keep.end(), i)) {
      prog.add_constraint(std::move(row), lp::Relation::equal, Rational(0));
    } else {
      row[slack] = -1;
      prog.add_constraint(std::move(row), lp::Relation::greater_equal, Rational(0));
    }
  }

  std::optional<OneParamSubgroup> lam;
  if (drops_something) {
    RationalVector row = detail::zero_row(prog);
    row[slack] = 1;
    prog.add_constraint(row, lp::Relation::less_equal, Rational(1));
    prog.maximize(std::move(row));
    lam = detail::sparsest_improving_direction(prog, d);
  } else {
    // Nothing to drop: any nonzero lambda constant on all weights will do.
    for (std::size_t i = 0; i < d && !lam; ++i) {
      RationalVector row = detail::zero_row(prog);
      row[i] = 1;
      auto attempt = prog;
      attempt.maximize(std::move(row));
      lam = detail::sparsest_improving_direction(attempt, d);
    }
  }
  if (lam && limit_support(support, *lam) != keep) {
    throw InternalError("degeneration " + to_string(*lam) + " failed re-verification");
  }
  return lam;
}

std::vector<std::size_t> limit_support(const WeightSupport& support, const OneParamSubgroup& lam) {
  const auto w = weight(lam, support);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (pair(lam, support.weights()[i]) == w) out.push_back(i);
  }
  return out;
}

}  // namespace stablepairs
