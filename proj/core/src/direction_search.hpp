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

#include <optional>

#include "stablepairs/lattice.hpp"
#include "stablepairs/lp.hpp"

// LP scaffolding shared by the stability and degeneration searches.
namespace stablepairs::detail {

/// Program over lambda (the first ambient_dim variables) plus `extra`
/// auxiliaries, normalized to the box -1 <= lambda_i <= 1, with
/// sum lambda_i = 0 in sl mode.
lp::LinearProgram direction_program(const LatticeContext& ctx, std::size_t extra = 0);

/// All-zero row for `prog`.
RationalVector zero_row(const lp::LinearProgram& prog);

/// Maximizes `prog`. If the optimum is positive, picks the optimal point of
/// least L1 norm in lambda and returns it as a primitive integer vector;
/// otherwise nullopt.
std::optional<OneParamSubgroup> sparsest_improving_direction(const lp::LinearProgram& prog,
                                                             std::size_t dim);

}  // namespace stablepairs::detail
