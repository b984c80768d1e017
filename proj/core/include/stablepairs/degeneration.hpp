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

#include <cstddef>
#include <optional>
#include <vector>

#include "stablepairs/lattice.hpp"
#include "stablepairs/stability.hpp"

namespace stablepairs {

/// Asks for a one-parameter subgroup whose limit keeps exactly the weights
/// at `keep` (0-based indices into support.weights()).
class DegenerationProblem {
 public:
  DegenerationProblem(WeightSupport support, std::vector<std::size_t> keep);

  const WeightSupport& support() const { return support_; }
  /// Sorted, unique.
  const std::vector<std::size_t>& keep() const { return keep_; }

 private:
  WeightSupport support_;
  std::vector<std::size_t> keep_;
};

/// A primitive lambda with <lambda, a_j> equal to a common value mu on every
/// kept weight and strictly above mu on every dropped one, so that the
/// renormalized limit of lambda(t) x has support exactly `keep`. nullopt when
/// no such lambda exists.
std::optional<OneParamSubgroup> find_degeneration(const DegenerationProblem& problem);

/// Indices of the weights attaining w_lambda, i.e. the support of the limit
/// lim t^{-w} lambda(t) x. Sorted ascending.
std::vector<std::size_t> limit_support(const WeightSupport& support, const OneParamSubgroup& lam);

}  // namespace stablepairs
