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

#include <cstdint>
#include <random>
#include <vector>

#include "stablepairs/cli/instance_file.hpp"

namespace stablepairs::cli {

/// Bounded integers from a 64-bit Mersenne twister. std distributions are
/// implementation-defined, so corpora would differ across standard libraries.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

struct CorpusOptions {
  int dim = 2;
  std::int64_t max_coord = 3;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  LatticeMode mode = LatticeMode::free;
};

/// One random single-frame instance. Free mode uses N(I) = hull{e_1, ..., e_d, -(1, ..., 1)}
/// and the least q that makes it valid, plus a coin-flip slack of one.
InstanceFile random_instance(CorpusRng& rng, const CorpusOptions& options);

std::vector<InstanceFile> generate_corpus(const CorpusOptions& options);

}  // namespace stablepairs::cli
