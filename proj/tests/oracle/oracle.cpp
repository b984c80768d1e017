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

#include "oracle.hpp"

#include <algorithm>
#include <numeric>

#include "stablepairs/errors.hpp"

namespace stablepairs::oracle {

namespace {

using IntRow = std::vector<std::int64_t>;

Integer common_denominator(const std::vector<RationalVector>& points) {
  Integer l = 1;
  for (const auto& p : points) {
    for (const auto& x : p) l = lcm(l, Integer(denominator(x)));
  }
  return l;
}

std::vector<IntRow> scaled_to_integers(const std::vector<RationalVector>& points) {
  const Integer l = common_denominator(points);
  std::vector<IntRow> out;
  for (const auto& p : points) {
    IntRow row;
    for (const auto& x : p) row.push_back(to_int64(Integer(numerator(x)) * (l / Integer(denominator(x)))));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<IntRow> raw_weights(const WeightSupport& s) {
  std::vector<IntRow> out;
  for (const auto& a : s.weights()) out.emplace_back(a.coords().begin(), a.coords().end());
  return out;
}

void add_differences(std::vector<IntRow>& rows, const std::vector<IntRow>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      IntRow diff(points[i].size());
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = points[i][k] - points[j][k];
      rows.push_back(std::move(diff));
    }
  }
}

std::int64_t l1(const OneParamSubgroup& lam) {
  std::int64_t s = 0;
  for (auto c : lam.coords()) s += c < 0 ? -c : c;
  return s;
}

void keep_best(std::optional<OneParamSubgroup>& best, const OneParamSubgroup& candidate) {
  if (!best || witness_less(candidate, *best)) best = candidate;
}

// Exact handle on q * w_lambda(I): N(I) scaled by its common denominator L.
struct ScaledIdentity {
  std::vector<IntRow> vertices;
  std::int64_t denominator = 1;

  explicit ScaledIdentity(const PairInstance& p) {
    if (p.context().mode() == LatticeMode::sl) {
      // The projected simplex pairs with trace-zero lambda like e_1..e_{N+1}.
      const auto n = static_cast<std::size_t>(p.context().ambient_dim());
      for (std::size_t i = 0; i < n; ++i) {
        IntRow e(n, 0);
        e[i] = 1;
        vertices.push_back(std::move(e));
      }
    } else {
      denominator = to_int64(common_denominator(p.identity().points()));
      vertices = scaled_to_integers(p.identity().points());
    }
  }

  // L * w_lambda(I).
  std::int64_t scaled_weight(const OneParamSubgroup& lam) const {
    std::int64_t best = 0;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < lam.size(); ++i) v += lam[i] * vertices[k][i];
      if (k == 0 || v < best) best = v;
    }
    return best;
  }
};

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

std::int64_t hadamard_minor_bound(const std::vector<IntRow>& rows, int dim) {
  if (dim <= 1) return 1;
  const int k = dim - 1;
  Integer best = 1;
  // Column subsets of size d-1 are "all columns but one".
  for (int skip = 0; skip < dim; ++skip) {
    std::vector<Integer> norms;
    for (const auto& r : rows) {
      Integer n2 = 0;
      for (int c = 0; c < dim; ++c) {
        if (c != skip) n2 += Integer(r[static_cast<std::size_t>(c)]) * r[static_cast<std::size_t>(c)];
      }
      norms.push_back(n2);
    }
    std::sort(norms.begin(), norms.end(), std::greater<>());
    Integer product = 1;
    for (int i = 0; i < k; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      product *= (idx < norms.size() && norms[idx] > 1) ? norms[idx] : Integer(1);
    }
    Integer root = sqrt(product);
    if (root * root < product) ++root;
    best = std::max(best, root);
  }
  return to_int64(best);
}

std::int64_t sufficient_bound(const PairInstance& p) {
  const auto& ctx = p.context();
  const int d = ctx.ambient_dim();
  std::vector<IntRow> rows;
  add_differences(rows, raw_weights(p.v()));
  add_differences(rows, raw_weights(p.w()));
  if (ctx.mode() == LatticeMode::sl) {
    add_differences(rows, ScaledIdentity(p).vertices);
    rows.emplace_back(static_cast<std::size_t>(d), 1);
  } else {
    add_differences(rows, scaled_to_integers(p.identity().points()));
  }
  return d * hadamard_minor_bound(rows, d);
}

OracleBox make_box(const PairInstance& p, std::optional<std::int64_t> bound) {
  const auto sufficient = sufficient_bound(p);
  OracleBox box;
  box.bound = bound.value_or(sufficient);
  if (box.bound < 1) throw InputError("oracle box bound must be positive");
  box.dim = p.context().ambient_dim();
  box.exhaustive_guarantee = box.dim <= 3 && box.bound >= sufficient;
  return box;
}

void for_each_subgroup(const LatticeContext& ctx, std::int64_t bound,
                       const std::function<void(const OneParamSubgroup&)>& fn) {
  const auto d = static_cast<std::size_t>(ctx.ambient_dim());
  const bool sl = ctx.mode() == LatticeMode::sl;
  const std::size_t free_coords = sl ? d - 1 : d;
  std::vector<std::int64_t> c(d, -bound);
  if (sl) c[d - 1] = 0;
  for (;;) {
    bool ok = true;
    if (sl) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < free_coords; ++i) s += c[i];
      c[d - 1] = -s;
      ok = c[d - 1] >= -bound && c[d - 1] <= bound;
    }
    if (ok && std::any_of(c.begin(), c.end(), [](auto x) { return x != 0; })) {
      fn(OneParamSubgroup(c));
    }
    std::size_t i = free_coords;
    while (i > 0) {
      --i;
      if (c[i] < bound) {
        ++c[i];
        break;
      }
      c[i] = -bound;
      if (i == 0) return;
    }
    if (free_coords == 0) return;
  }
}

bool witness_less(const OneParamSubgroup& a, const OneParamSubgroup& b) {
  const auto la = l1(a);
  const auto lb = l1(b);
  if (la != lb) return la < lb;
  return a < b;
}

BruteDecision brute_semistable(const PairInstance& p, const OracleBox& box) {
  std::optional<OneParamSubgroup> best;
  for_each_subgroup(p.context(), box.bound, [&](const OneParamSubgroup& lam) {
    if (weight(lam, p.w()) > weight(lam, p.v())) keep_best(best, lam);
  });
  return {!best, best};
}

BruteDecision brute_stable(const PairInstance& p, const OracleBox& box) {
  auto semi = brute_semistable(p, box);
  if (!semi.holds) return semi;
  const ScaledIdentity id(p);
  std::optional<OneParamSubgroup> best;
  for_each_subgroup(p.context(), box.bound, [&](const OneParamSubgroup& lam) {
    const auto wv = weight(lam, p.v());
    if (weight(lam, p.w()) != wv) return;
    if (id.denominator * wv > p.q() * id.scaled_weight(lam)) keep_best(best, lam);
  });
  return {!best, best};
}

std::optional<std::int64_t> brute_min_m(const PairInstance& p, const OracleBox& box,
                                        std::int64_t m_cap) {
  const ScaledIdentity id(p);
  std::int64_t m = 1;
  bool impossible = false;
  for_each_subgroup(p.context(), box.bound, [&](const OneParamSubgroup& lam) {
    if (impossible) return;
    const auto wv = weight(lam, p.v());
    const auto ww = weight(lam, p.w());
    // m (wv - ww) >= wv - q wI, everything times L.
    const auto rhs = id.denominator * wv - p.q() * id.scaled_weight(lam);
    const auto gap = id.denominator * (wv - ww);
    if (gap < 0 || (gap == 0 && rhs > 0)) {
      impossible = true;
      return;
    }
    if (gap > 0) m = std::max(m, ceil_div(rhs, gap));
  });
  if (impossible || m > m_cap) return std::nullopt;
  return m;
}

std::optional<OneParamSubgroup> brute_degeneration(const DegenerationProblem& problem,
                                                   std::int64_t bound) {
  std::optional<OneParamSubgroup> best;
  for_each_subgroup(problem.support().context(), bound, [&](const OneParamSubgroup& lam) {
    if (limit_support(problem.support(), lam) == problem.keep()) keep_best(best, lam);
  });
  return best;
}

std::vector<RationalVector> monotone_chain_hull(std::vector<RationalVector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;
  auto cross = [](const RationalVector& o, const RationalVector& a, const RationalVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<RationalVector> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& pt : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  std::sort(hull.begin(), hull.end());
  return hull;
}

bool brute_includes(const RationalPolytope& p, const RationalPolytope& q, std::int64_t bound) {
  const auto d = static_cast<int>(p.dim());
  auto max_over = [](const std::vector<RationalVector>& pts, const OneParamSubgroup& x) {
    Rational best = pair(x, pts.front());
    for (const auto& y : pts) best = std::max(best, pair(x, y));
    return best;
  };
  bool ok = true;
  for_each_subgroup(LatticeContext::free_torus(d), bound, [&](const OneParamSubgroup& x) {
    if (ok && max_over(q.points(), x) > max_over(p.points(), x)) ok = false;
  });
  return ok;
}

}  // namespace stablepairs::oracle
