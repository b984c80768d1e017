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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stablepairs/rational.hpp"

namespace stablepairs {

class RationalPolytope;

enum class LatticeMode { free, sl };

/// Ambient lattice for weights and one-parameter subgroups.
///
/// Free mode is the character lattice Z^r of an abstract rank-r torus.
/// SL mode models the maximal torus of SL(N+1): weights live in Z^{N+1}
/// modulo the all-ones vector, and one-parameter subgroups are the
/// trace-zero vectors of Z^{N+1}.
class LatticeContext {
 public:
  static LatticeContext free_torus(int rank);
  static LatticeContext special_linear(int matrix_size);

  LatticeMode mode() const { return mode_; }
  int ambient_dim() const { return dim_; }
  std::optional<int> rank() const;
  std::optional<int> matrix_size() const;

  bool operator==(const LatticeContext&) const = default;

 private:
  LatticeContext(LatticeMode mode, int dim) : mode_(mode), dim_(dim) {}

  LatticeMode mode_;
  int dim_;
};

/// A character of the torus (an element of M_Z).
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::span<const std::int64_t> coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  auto operator<=>(const Weight&) const = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// A cocharacter (an element of N_Z), i.e. a one-parameter subgroup of the torus.
class OneParamSubgroup {
 public:
  OneParamSubgroup() = default;
  explicit OneParamSubgroup(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  OneParamSubgroup(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::span<const std::int64_t> coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  auto operator<=>(const OneParamSubgroup&) const = default;

 private:
  std::vector<std::int64_t> coords_;
};

std::string to_string(const Weight& a);
std::string to_string(const OneParamSubgroup& lam);

/// Throws InputError unless `a` has the context's ambient dimension.
void check_weight(const LatticeContext& ctx, const Weight& a);

/// Throws InputError unless `lam` has the ambient dimension, has zero
/// coordinate sum in sl mode, and (when `nonzero`) is not the zero vector.
void check_subgroup(const LatticeContext& ctx, const OneParamSubgroup& lam, bool nonzero = true);

/// The standard pairing N_Z x M_Z -> Z.
std::int64_t pair(const OneParamSubgroup& lam, const Weight& a);

/// Pairing against a rational point of M_Q (projected weights, polytope vertices).
Rational pair(const OneParamSubgroup& lam, std::span<const Rational> y);

/// Orthogonal projection of a weight onto the trace-zero hyperplane, which
/// realizes M_R = R^{N+1} / R(1,...,1). Throws ModeError in free mode.
RationalVector project_sl(const LatticeContext& ctx, const Weight& a);

/// k times the standard simplex, hull{k e_1, ..., k e_{N+1}}, in ambient coordinates.
RationalPolytope standard_simplex(const LatticeContext& ctx, std::int64_t k);

}  // namespace stablepairs
