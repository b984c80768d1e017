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

#include "stablepairs/lp.hpp"

#include <optional>

#include "stablepairs/errors.hpp"

namespace stablepairs::lp {

LinearProgram::LinearProgram(std::size_t num_vars)
    : num_vars_(num_vars), objective_(num_vars, Rational(0)), nonnegative_(num_vars, false) {}

LinearProgram::LinearProgram(std::size_t num_vars, std::vector<Constraint> constraints,
                             RationalVector objective, Sense sense)
    : LinearProgram(num_vars) {
  for (auto& c : constraints) add_constraint(std::move(c.coeffs), c.relation, std::move(c.rhs));
  if (sense == Sense::maximize) {
    maximize(std::move(objective));
  } else if (!objective.empty() && objective.size() != num_vars_) {
    throw InputError("objective row has wrong length");
  }
}

void LinearProgram::add_constraint(RationalVector coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != num_vars_) {
    throw InputError("constraint row has length " + std::to_string(coeffs.size()) +
                     ", expected " + std::to_string(num_vars_));
  }
  constraints_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LinearProgram::add_bounds(std::size_t var, const Rational& lower, const Rational& upper) {
  if (var >= num_vars_) throw InputError("bound on nonexistent variable");
  RationalVector row(num_vars_, Rational(0));
  row[var] = 1;
  add_constraint(row, Relation::greater_equal, lower);
  add_constraint(std::move(row), Relation::less_equal, upper);
}

void LinearProgram::require_nonnegative(std::size_t var) {
  if (var >= num_vars_) throw InputError("sign restriction on nonexistent variable");
  nonnegative_[var] = true;
}

void LinearProgram::maximize(RationalVector objective) {
  if (objective.size() != num_vars_) throw InputError("objective row has wrong length");
  objective_ = std::move(objective);
  sense_ = Sense::maximize;
}

namespace {

// Standard-form tableau: A x = b, x >= 0, b >= 0, with a basis column per
// row and a reduced-cost row d so that objective = value + d . x_nonbasic.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, RationalVector(cols, Rational(0))), b_(rows), basis_(rows), allowed_(cols, true) {}

  Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  Rational& rhs(std::size_t i) { return b_[i]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return allowed_.size(); }
  std::size_t basic(std::size_t i) const { return basis_[i]; }
  void set_basic(std::size_t i, std::size_t col) { basis_[i] = col; }
  void forbid(std::size_t col) { allowed_[col] = false; }
  const Rational& value() const { return value_; }

  void set_objective(const RationalVector& cost) {
    reduced_ = cost;
    value_ = 0;
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (is_zero(cb)) continue;
      value_ += cb * b_[i];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!is_zero(a_[i][j])) reduced_[j] -= cb * a_[i][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (auto& x : a_[r]) {
      if (!is_zero(x)) x /= p;
    }
    b_[r] /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || is_zero(a_[i][c])) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!is_zero(a_[r][j])) a_[i][j] -= f * a_[r][j];
      }
      b_[i] -= f * b_[r];
    }
    if (!is_zero(reduced_[c])) {
      const Rational f = reduced_[c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!is_zero(a_[r][j])) reduced_[j] -= f * a_[r][j];
      }
      value_ += f * b_[r];
    }
    basis_[r] = c;
  }

  // Runs Bland's rule to optimality. Returns the unbounded entering column, if any.
  std::optional<std::size_t> optimize() {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (allowed_[j] && reduced_[j] > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return std::nullopt;
      const std::size_t c = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][c] <= 0) continue;
        Rational ratio = b_[i] / a_[i][c];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = std::move(ratio);
        }
      }
      if (!leaving) return c;
      pivot(*leaving, c);
    }
  }

  void erase_row(std::size_t i) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  RationalVector column_values() const {
    RationalVector x(cols(), Rational(0));
    for (std::size_t i = 0; i < rows(); ++i) x[basis_[i]] = b_[i];
    return x;
  }

  RationalVector ray_for(std::size_t entering) const {
    RationalVector d(cols(), Rational(0));
    d[entering] = 1;
    for (std::size_t i = 0; i < rows(); ++i) d[basis_[i]] = -a_[i][entering];
    return d;
  }

 private:
  std::vector<RationalVector> a_;
  RationalVector b_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
  RationalVector reduced_;
  Rational value_;
};

// Free variable j occupies columns pos[j] and neg[j] (x = x+ - x-);
// a nonnegative variable only pos[j].
struct ColumnMap {
  std::vector<std::size_t> pos;
  std::vector<std::optional<std::size_t>> neg;
  std::size_t count = 0;

  explicit ColumnMap(const LinearProgram& lp) {
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
      pos.push_back(count++);
      neg.push_back(lp.is_nonnegative(j) ? std::nullopt : std::optional(count++));
    }
  }

  RationalVector recover(const RationalVector& columns) const {
    RationalVector x(pos.size());
    for (std::size_t j = 0; j < pos.size(); ++j) {
      x[j] = columns[pos[j]];
      if (neg[j]) x[j] -= columns[*neg[j]];
    }
    return x;
  }
};

}  // namespace

Solution solve(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  const auto& cons = lp.constraints();
  const std::size_t m = cons.size();

  const ColumnMap map(lp);
  // Columns: structural, then one slack or surplus per inequality, then artificials.
  std::size_t num_slack = 0;
  for (const auto& c : cons) {
    if (c.relation != Relation::equal) ++num_slack;
  }
  std::vector<bool> needs_artificial(m);
  std::size_t num_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = cons[i].rhs < 0;
    const Relation rel = cons[i].relation;
    needs_artificial[i] = rel == Relation::equal ||
                          (rel == Relation::less_equal && flip) ||
                          (rel == Relation::greater_equal && !flip);
    if (needs_artificial[i]) ++num_art;
  }
  const std::size_t slack0 = map.count;
  const std::size_t art0 = slack0 + num_slack;
  Tableau t(m, art0 + num_art);

  std::size_t slack = slack0;
  std::size_t art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = cons[i];
    const bool flip = c.rhs < 0;
    const int sign = flip ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(c.coeffs[j])) continue;
      t.at(i, map.pos[j]) = sign * c.coeffs[j];
      if (map.neg[j]) t.at(i, *map.neg[j]) = -sign * c.coeffs[j];
    }
    t.rhs(i) = sign * c.rhs;
    if (c.relation != Relation::equal) {
      const int slack_sign = (c.relation == Relation::less_equal) ? sign : -sign;
      t.at(i, slack) = slack_sign;
      if (!needs_artificial[i]) t.set_basic(i, slack);
      ++slack;
    }
    if (needs_artificial[i]) {
      t.at(i, art) = 1;
      t.set_basic(i, art);
      ++art;
    }
  }

  Solution sol;
  if (num_art > 0) {
    RationalVector phase1(t.cols(), Rational(0));
    for (std::size_t j = art0; j < t.cols(); ++j) phase1[j] = -1;
    t.set_objective(phase1);
    t.optimize();
    if (t.value() < 0) {
      sol.status = Status::infeasible;
      return sol;
    }
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (t.basic(i) < art0) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < art0; ++j) {
        if (!is_zero(t.at(i, j))) {
          col = j;
          break;
        }
      }
      if (col) {
        t.pivot(i, *col);
      } else {
        t.erase_row(i);
      }
    }
    for (std::size_t j = art0; j < t.cols(); ++j) t.forbid(j);
  }

  RationalVector cost(t.cols(), Rational(0));
  if (lp.sense() == Sense::maximize) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[map.pos[j]] = lp.objective()[j];
      if (map.neg[j]) cost[*map.neg[j]] = -lp.objective()[j];
    }
  }
  t.set_objective(cost);
  const auto unbounded = t.optimize();
  sol.point = map.recover(t.column_values());
  if (unbounded) {
    sol.status = Status::unbounded;
    sol.ray = map.recover(t.ray_for(*unbounded));
    return sol;
  }
  sol.status = Status::optimal;
  sol.value = t.value();
  return sol;
}

bool satisfies(const LinearProgram& lp, std::span<const Rational> point) {
  if (point.size() != lp.num_vars()) return false;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (lp.is_nonnegative(j) && point[j] < 0) return false;
  }
  for (const auto& c : lp.constraints()) {
    const Rational lhs = dot(c.coeffs, point);
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

std::vector<std::int64_t> rationalize_direction(std::span<const Rational> point) {
  Integer scale = 1;
  bool nonzero = false;
  for (const auto& x : point) {
    if (is_zero(x)) continue;
    nonzero = true;
    scale = lcm(scale, Integer(denominator(x)));
  }
  if (!nonzero) throw InputError("cannot rationalize the zero vector");
  std::vector<Integer> scaled;
  Integer g = 0;
  for (const auto& x : point) {
    Integer v = Integer(numerator(x)) * (scale / Integer(denominator(x)));
    g = gcd(g, v);
    scaled.push_back(std::move(v));
  }
  std::vector<std::int64_t> out;
  out.reserve(scaled.size());
  for (const auto& v : scaled) out.push_back(to_int64(v / abs(g)));
  return out;
}

}  // namespace stablepairs::lp
