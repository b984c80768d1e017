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

#include "stablepairs/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stablepairs/errors.hpp"

namespace stablepairs::numeric {

CoefficientVector::CoefficientVector(WeightSupport support, std::vector<double> magnitudes)
    : support_(std::move(support)), magnitudes_(std::move(magnitudes)) {
  if (magnitudes_.size() != support_.size()) {
    throw InputError("expected " + std::to_string(support_.size()) + " coefficients, got " +
                     std::to_string(magnitudes_.size()));
  }
  for (double c : magnitudes_) {
    if (!(c > 0) || !std::isfinite(c)) throw InputError("coefficient magnitudes must be positive");
  }
}

CoefficientVector CoefficientVector::unit(WeightSupport support) {
  const auto n = support.size();
  return {std::move(support), std::vector<double>(n, 1.0)};
}

TorusPoint TorusPoint::from_moduli(std::span<const double> moduli) {
  std::vector<double> logs;
  logs.reserve(moduli.size());
  for (double m : moduli) {
    if (!(m > 0) || !std::isfinite(m)) throw InputError("torus moduli must be positive");
    logs.push_back(std::log(m));
  }
  return TorusPoint(std::move(logs));
}

TorusPoint TorusPoint::from_log_moduli(std::vector<double> log_moduli) {
  for (double l : log_moduli) {
    if (!std::isfinite(l)) throw InputError("torus log-moduli must be finite");
  }
  return TorusPoint(std::move(log_moduli));
}

TorusPoint TorusPoint::along(const OneParamSubgroup& lam, double log_t) {
  std::vector<double> logs;
  logs.reserve(lam.size());
  for (auto c : lam.coords()) logs.push_back(static_cast<double>(c) * log_t);
  return TorusPoint(std::move(logs));
}

double log_norm_sq(const TorusPoint& t, const CoefficientVector& v) {
  const auto& logs = t.log_moduli();
  const auto& weights = v.support().weights();
  if (logs.size() != weights.front().size()) throw InputError("torus point dimension mismatch");
  // Factor out the dominant exponent before summing.
  std::vector<double> exponents;
  exponents.reserve(weights.size());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    double e = 2.0 * std::log(v.magnitudes()[k]);
    for (std::size_t i = 0; i < logs.size(); ++i) e += 2.0 * static_cast<double>(weights[k][i]) * logs[i];
    exponents.push_back(e);
  }
  const double top = *std::max_element(exponents.begin(), exponents.end());
  double sum = 0.0;
  for (double e : exponents) sum += std::exp(e - top);
  return top + std::log(sum);
}

double norm_sq(const TorusPoint& t, const CoefficientVector& v) { return std::exp(log_norm_sq(t, v)); }

double p_value(const TorusPoint& t, const CoefficientVector& v, const CoefficientVector& w) {
  return log_norm_sq(t, w) - log_norm_sq(t, v);
}

double slope_along(const OneParamSubgroup& lam, const CoefficientVector& v,
                   const CoefficientVector& w) {
  check_subgroup(v.support().context(), lam);
  check_subgroup(w.support().context(), lam);
  const double p1 = p_value(TorusPoint::along(lam, kSlopeLogT1), v, w);
  const double p2 = p_value(TorusPoint::along(lam, kSlopeLogT2), v, w);
  return (p2 - p1) / (2.0 * kSlopeLogT2 - 2.0 * kSlopeLogT1);
}

double f_energy(std::span<const double> theta, const WeightSupport& av, const WeightSupport& aw) {
  auto support_max = [&](const WeightSupport& s) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& y : s.points()) {
      if (y.size() != theta.size()) throw InputError("f_energy: dimension mismatch");
      double value = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) value += to_double(y[i]) * theta[i];
      best = std::max(best, value);
    }
    return best;
  };
  return support_max(aw) - support_max(av);
}

}  // namespace stablepairs::numeric
