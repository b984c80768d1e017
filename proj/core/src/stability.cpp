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

#include "stablepairs/stability.hpp"

#include <algorithm>
#include <numeric>

#include "direction_search.hpp"
#include "stablepairs/errors.hpp"

namespace stablepairs {

namespace {

std::vector<Weight> dedupe(const LatticeContext& ctx, std::vector<Weight> weights) {
  if (weights.empty()) throw InputError("weight support must be nonempty");
  std::vector<Weight> out;
  for (auto& a : weights) {
    check_weight(ctx, a);
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
  }
  return out;
}

std::vector<RationalVector> working_points(const LatticeContext& ctx,
                                           const std::vector<Weight>& weights) {
  std::vector<RationalVector> out;
  out.reserve(weights.size());
  for (const auto& a : weights) out.push_back(working_point(ctx, a));
  return out;
}

RationalPolytope identity_for(const LatticeContext& ctx, std::optional<RationalPolytope> identity) {
  if (ctx.mode() == LatticeMode::sl) {
    if (identity) throw InputError("sl-mode instances use the standard simplex; do not pass N(I)");
    std::vector<RationalVector> vertices;
    for (int i = 0; i < ctx.ambient_dim(); ++i) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(ctx.ambient_dim()), 0);
      e[static_cast<std::size_t>(i)] = 1;
      vertices.push_back(project_sl(ctx, Weight(std::move(e))));
    }
    return RationalPolytope(std::move(vertices));
  }
  if (!identity) throw InputError("free-mode instances require an explicit N(I)");
  if (static_cast<int>(identity->dim()) != ctx.ambient_dim()) {
    throw InputError("N(I) dimension does not match the torus rank");
  }
  if (!contains_point(*identity, RationalVector(identity->dim(), Rational(0)))) {
    throw InputError("N(I) must contain the origin");
  }
  return std::move(*identity);
}

RationalVector difference(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Row <lambda, c> over the first d variables of `prog`, zero elsewhere.
RationalVector lambda_row(const lp::LinearProgram& prog, const RationalVector& c) {
  RationalVector row = detail::zero_row(prog);
  std::copy(c.begin(), c.end(), row.begin());
  return row;
}

void keep_smallest(std::optional<OneParamSubgroup>& best, std::optional<OneParamSubgroup> candidate) {
  if (candidate && (!best || *candidate < *best)) best = std::move(candidate);
}

// Direction separating the vertex `outside` of N(v) from N(w): maximize s
// subject to <lambda, c - outside> >= s for every vertex c of N(w).
std::optional<OneParamSubgroup> separating_direction(const PairInstance& p,
                                                     const RationalVector& outside) {
  const auto d = static_cast<std::size_t>(p.context().ambient_dim());
  auto prog = detail::direction_program(p.context(), 1);
  for (const auto& c : p.w().polytope().vertices()) {
    RationalVector row = lambda_row(prog, difference(c, outside));
    row[d] = -1;
    prog.add_constraint(std::move(row), lp::Relation::greater_equal, Rational(0));
  }
  RationalVector objective = detail::zero_row(prog);
  objective[d] = 1;
  prog.maximize(std::move(objective));
  return detail::sparsest_improving_direction(prog, d);
}

// Direction on which u and hat_p are minimizers of N(v) and q N(I), N(w)
// does not go below u, and <lambda, u - hat_p> is maximized.
std::optional<OneParamSubgroup> equality_locus_direction(const PairInstance& p,
                                                         const RationalVector& u,
                                                         const RationalVector& hat_p) {
  const auto d = static_cast<std::size_t>(p.context().ambient_dim());
  auto prog = detail::direction_program(p.context());
  auto at_least = [&](const RationalVector& other, const RationalVector& base) {
    if (other == base) return;
    prog.add_constraint(lambda_row(prog, difference(other, base)), lp::Relation::greater_equal,
                        Rational(0));
  };
  for (const auto& a : p.v().polytope().vertices()) at_least(a, u);
  for (const auto& b : p.scaled_identity().vertices()) at_least(b, hat_p);
  for (const auto& c : p.w().polytope().vertices()) at_least(c, u);
  prog.maximize(lambda_row(prog, difference(u, hat_p)));
  return detail::sparsest_improving_direction(prog, d);
}

bool violates_semistability(const PairInstance& p, const OneParamSubgroup& lam) {
  return weight(lam, p.w()) > weight(lam, p.v());
}

bool violates_stability(const PairInstance& p, const OneParamSubgroup& lam) {
  const auto wv = weight(lam, p.v());
  return weight(lam, p.w()) == wv && Rational(wv) > p.q() * identity_weight(lam, p);
}

}  // namespace

RationalVector working_point(const LatticeContext& ctx, const Weight& a) {
  check_weight(ctx, a);
  if (ctx.mode() == LatticeMode::sl) return project_sl(ctx, a);
  return to_rational(a.coords());
}

WeightSupport::WeightSupport(LatticeContext ctx, std::vector<Weight> weights)
    : ctx_(ctx),
      weights_(dedupe(ctx, std::move(weights))),
      points_(working_points(ctx_, weights_)),
      polytope_(points_) {}

PairInstance::PairInstance(WeightSupport v, WeightSupport w, std::int64_t q,
                           std::optional<RationalPolytope> identity)
    : v_(std::move(v)),
      w_(std::move(w)),
      q_(q),
      identity_(identity_for(v_.context(), std::move(identity))),
      scaled_identity_(identity_.scaled(Rational(q > 0 ? q : 1))) {
  if (!(v_.context() == w_.context())) throw InputError("v and w supports use different lattices");
  if (q_ < 1) throw InputError("deg(V) must be a positive integer");
  const auto inside = includes(scaled_identity_, v_.polytope());
  if (!inside) {
    std::string where;
    for (const auto& x : *inside.witness) where += (where.empty() ? "" : ",") + to_string(x);
    throw InputError("N(v) is not contained in q N(I) (q = " + std::to_string(q_) +
                     "): vertex [" + where + "] lies outside");
  }
}

FrameFamily::FrameFamily(std::vector<PairInstance> frames) : frames_(std::move(frames)) {
  if (frames_.empty()) throw InputError("frame family must be nonempty");
  for (const auto& f : frames_) {
    if (!(f.context() == frames_.front().context())) {
      throw InputError("all frames must share one lattice");
    }
    if (f.q() != frames_.front().q()) throw InputError("all frames must share deg(V)");
  }
}

std::int64_t weight(const OneParamSubgroup& lam, const WeightSupport& support) {
  check_subgroup(support.context(), lam);
  std::int64_t best = pair(lam, support.weights().front());
  for (const auto& a : support.weights()) best = std::min(best, pair(lam, a));
  return best;
}

Rational identity_weight(const OneParamSubgroup& lam, const PairInstance& p) {
  check_subgroup(p.context(), lam);
  const auto& vs = p.identity().vertices();
  Rational best = pair(lam, vs.front());
  for (const auto& y : vs) best = std::min(best, pair(lam, y));
  return best;
}

std::int64_t deg_of_V(const WeightSupport& all_rep_weights) {
  const auto& ctx = all_rep_weights.context();
  if (ctx.mode() != LatticeMode::sl) throw ModeError("deg_of_V requires an sl-mode context");
  // The coset of a meets k * simplex iff k >= sum(a) - (N+1) min(a).
  std::int64_t k = 1;
  for (const auto& a : all_rep_weights.weights()) {
    const auto c = a.coords();
    const auto sum = std::accumulate(c.begin(), c.end(), std::int64_t{0});
    const auto lowest = *std::min_element(c.begin(), c.end());
    k = std::max(k, sum - ctx.ambient_dim() * lowest);
  }
  return k;
}

Decision is_semistable(const PairInstance& p) {
  if (includes(p.w().polytope(), p.v().polytope())) return {};
  std::optional<OneParamSubgroup> best;
  for (const auto& m : p.v().polytope().vertices()) {
    if (contains_point(p.w().polytope(), m)) continue;
    keep_smallest(best, separating_direction(p, m));
  }
  if (!best || !violates_semistability(p, *best)) {
    throw InternalError("semistability witness failed re-verification");
  }
  return {false, std::move(best), Clause::semistability};
}

Decision is_stable(const PairInstance& p) {
  auto semi = is_semistable(p);
  if (!semi) return semi;
  std::optional<OneParamSubgroup> best;
  for (const auto& u : p.v().polytope().vertices()) {
    for (const auto& hat_p : p.scaled_identity().vertices()) {
      auto lam = equality_locus_direction(p, u, hat_p);
      if (lam && !violates_stability(p, *lam)) {
        throw InternalError("stability witness " + to_string(*lam) + " failed re-verification");
      }
      keep_smallest(best, std::move(lam));
    }
  }
  if (!best) return {};
  return {false, std::move(best), Clause::stability};
}

bool uniform_inclusion_holds(const PairInstance& p, std::int64_t m) {
  if (m < 1) throw InputError("m must be a positive integer");
  const Rational t(1, m);
  const Rational s = 1 - t;
  // Every generator s a + t b of the combination must lie in N(w); its hull
  // is not needed for that.
  for (const auto& a : p.v().polytope().vertices()) {
    for (const auto& b : p.scaled_identity().vertices()) {
      RationalVector c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i] + t * b[i];
      if (!contains_point(p.w().polytope(), c)) return false;
    }
  }
  return true;
}

namespace {

// Doubling then bisection; assumes p is stable, so the search terminates.
std::int64_t search_uniform_m(const PairInstance& p) {
  constexpr std::int64_t cap = std::int64_t{1} << 20;
  std::int64_t hi = 1;
  while (!uniform_inclusion_holds(p, hi)) {
    if (hi >= cap) throw InternalError("uniform stability search exceeded m = 2^20");
    hi *= 2;
  }
  // Inclusion is monotone in m; the answer lies in (hi/2, hi].
  std::int64_t lo = hi / 2;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (uniform_inclusion_holds(p, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

std::optional<std::int64_t> minimal_uniform_m(const PairInstance& p) {
  if (!is_stable(p)) return std::nullopt;
  return search_uniform_m(p);
}

bool check_tian0(const PairInstance& p, std::int64_t m, const OneParamSubgroup& lam) {
  if (m < 1) throw InputError("m must be a positive integer");
  const auto wv = weight(lam, p.v());
  const auto ww = weight(lam, p.w());
  return Rational(m * (wv - ww)) >= Rational(wv) - p.q() * identity_weight(lam, p);
}

StabilityVerdict verdict(const FrameFamily& family) {
  StabilityVerdict out;
  out.semistable = true;
  out.stable = true;
  std::optional<std::size_t> first_unstable;
  std::optional<std::size_t> first_not_stable;
  std::vector<Decision> decisions;
  for (std::size_t i = 0; i < family.frames().size(); ++i) {
    auto d = is_stable(family.frames()[i]);
    if (!d) {
      out.stable = false;
      if (d.violated == Clause::semistability) {
        out.semistable = false;
        if (!first_unstable) first_unstable = i;
      } else if (!first_not_stable) {
        first_not_stable = i;
      }
    }
    decisions.push_back(std::move(d));
  }
  if (auto idx = first_unstable ? first_unstable : first_not_stable) {
    out.witness = decisions[*idx].witness;
    out.violated = decisions[*idx].violated;
    out.frame_index = idx;
    return out;
  }
  std::int64_t m = 1;
  for (const auto& f : family.frames()) m = std::max(m, search_uniform_m(f));
  out.uniform_m = m;
  return out;
}

}  // namespace stablepairs
