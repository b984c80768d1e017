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

#include "stablepairs/cli/corpus.hpp"

#include <algorithm>
#include <limits>

namespace stablepairs::cli {

std::int64_t CorpusRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InputError("empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
  // Equal-width buckets; draws past the last full bucket are rejected.
  const std::uint64_t bucket = std::numeric_limits<std::uint64_t>::max() / span;
  std::uint64_t x;
  do {
    x = engine_() / bucket;
  } while (x >= span);
  return lo + static_cast<std::int64_t>(x);
}

namespace {

std::vector<Weight> draw_weights(CorpusRng& rng, int dim, std::int64_t max_coord, std::int64_t count) {
  std::vector<Weight> out;
  for (std::int64_t k = 0; k < count; ++k) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(dim));
    for (auto& x : c) x = rng.uniform(-max_coord, max_coord);
    Weight w(std::move(c));
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  }
  return out;
}

std::vector<RationalVector> free_simplex(int dim) {
  std::vector<RationalVector> pts;
  for (int i = 0; i < dim; ++i) {
    RationalVector e(static_cast<std::size_t>(dim), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(e));
  }
  pts.emplace_back(static_cast<std::size_t>(dim), Rational(-1));
  return pts;
}

}  // namespace

InstanceFile random_instance(CorpusRng& rng, const CorpusOptions& options) {
  if (options.dim < 1 || (options.mode == LatticeMode::sl && options.dim < 2)) {
    throw InputError("corpus dimension too small for the chosen mode");
  }
  if (options.max_coord < 0) throw InputError("max-coord must be nonnegative");
  InstanceFile file;
  file.context = options.mode == LatticeMode::sl ? LatticeContext::special_linear(options.dim)
                                                 : LatticeContext::free_torus(options.dim);
  FrameSpec frame;
  frame.v_support = draw_weights(rng, options.dim, options.max_coord, rng.uniform(1, 3));
  frame.w_support = draw_weights(rng, options.dim, options.max_coord, rng.uniform(1, 4));
  // Two times in three w contains v, so semistable instances are common.
  if (rng.uniform(0, 2) > 0) {
    for (const auto& a : frame.v_support) {
      if (std::find(frame.w_support.begin(), frame.w_support.end(), a) == frame.w_support.end()) {
        frame.w_support.push_back(a);
      }
    }
  }
  const std::int64_t slack = rng.uniform(0, 1);
  const WeightSupport v(file.context, frame.v_support);
  if (options.mode == LatticeMode::sl) {
    if (slack == 0 && rng.uniform(0, 1) == 1) {
      // Let the file derive q from the full weight list.
      std::vector<Weight> all = frame.v_support;
      all.insert(all.end(), frame.w_support.begin(), frame.w_support.end());
      file.rep_weights = std::move(all);
    } else {
      file.q = deg_of_V(v) + slack;
    }
  } else {
    file.identity_polytope = free_simplex(options.dim);
    const RationalPolytope identity(*file.identity_polytope);
    std::int64_t q = 1;
    while (!includes(identity.scaled(Rational(q)), v.polytope())) ++q;
    file.q = q + slack;
  }
  file.frames.push_back(std::move(frame));
  return file;
}

std::vector<InstanceFile> generate_corpus(const CorpusOptions& options) {
  CorpusRng rng(options.seed);
  std::vector<InstanceFile> out;
  out.reserve(options.count);
  for (std::size_t i = 0; i < options.count; ++i) out.push_back(random_instance(rng, options));
  return out;
}

}  // namespace stablepairs::cli
