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

#include <span>
#include <vector>

#include "stablepairs/lattice.hpp"
#include "stablepairs/stability.hpp"

// Floating-point side of the theory: norms of torus translates, the
// functional p_{v,w}, slopes along one-parameter subgroups, and the
// piecewise-linear energy f. Everything is evaluated in the log domain.
namespace stablepairs::numeric {

/// |c_alpha| for each weight of a support (aligned with support.weights()).
class CoefficientVector {
 public:
  CoefficientVector(WeightSupport support, std::vector<double> magnitudes);
  static CoefficientVector unit(WeightSupport support);

  const WeightSupport& support() const { return support_; }
  const std::vector<double>& magnitudes() const { return magnitudes_; }

 private:
  WeightSupport support_;
  std::vector<double> magnitudes_;
};

/// Moduli |t_i| of a diagonal torus element, stored as logarithms.
class TorusPoint {
 public:
  static TorusPoint from_moduli(std::span<const double> moduli);
  static TorusPoint from_log_moduli(std::vector<double> log_moduli);
  /// lambda(t) for real t > 0 given as log t.
  static TorusPoint along(const OneParamSubgroup& lam, double log_t);

  const std::vector<double>& log_moduli() const { return log_moduli_; }

 private:
  explicit TorusPoint(std::vector<double> log_moduli) : log_moduli_(std::move(log_moduli)) {}
  std::vector<double> log_moduli_;
};

/// log of sum_alpha |c_alpha|^2 prod_i |t_i|^{2 a_{alpha,i}}.
double log_norm_sq(const TorusPoint& t, const CoefficientVector& v);
double norm_sq(const TorusPoint& t, const CoefficientVector& v);

/// log ||t w||^2 - log ||t v||^2.
double p_value(const TorusPoint& t, const CoefficientVector& v, const CoefficientVector& w);

/// Secant estimate of the coefficient of log|t|^2 in p(lambda(t)) near t = 0,
/// which tends to w_lambda(w) - w_lambda(v).
double slope_along(const OneParamSubgroup& lam, const CoefficientVector& v,
                   const CoefficientVector& w);

/// Secant sample points used by slope_along.
inline constexpr double kSlopeLogT1 = -40.0 * 0.69314718055994530942;  // log 2^-40
inline constexpr double kSlopeLogT2 = -48.0 * 0.69314718055994530942;  // log 2^-48

/// max over Aw of <a, theta> minus max over Av of <a, theta>, using working
/// coordinates (trace-zero projections in sl mode).
double f_energy(std::span<const double> theta, const WeightSupport& av, const WeightSupport& aw);

}  // namespace stablepairs::numeric
