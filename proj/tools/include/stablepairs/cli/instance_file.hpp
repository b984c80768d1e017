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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "stablepairs/errors.hpp"
#include "stablepairs/lattice.hpp"
#include "stablepairs/stability.hpp"

namespace stablepairs::cli {

/// Malformed or invalid instance file. what() carries the line or field path.
class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

struct FrameSpec {
  std::vector<Weight> v_support;
  std::vector<Weight> w_support;
  std::optional<std::vector<double>> v_coeffs;
  std::optional<std::vector<double>> w_coeffs;
};

struct InstanceFile {
  LatticeContext context = LatticeContext::free_torus(1);
  std::optional<std::int64_t> q;
  std::optional<std::vector<RationalVector>> identity_polytope;
  std::optional<std::vector<Weight>> rep_weights;
  std::vector<FrameSpec> frames;
};

InstanceFile parse_instance(std::string_view text);
InstanceFile load_instance(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const InstanceFile& file);
/// Pretty-printed, newline-terminated.
std::string serialize(const InstanceFile& file);

/// q from the file, or deg_of_V(rep_weights) in sl mode.
std::int64_t effective_q(const InstanceFile& file);

/// Throws SchemaError naming the offending frame.
PairInstance build_frame(const InstanceFile& file, std::size_t index);
FrameFamily build_family(const InstanceFile& file);

}  // namespace stablepairs::cli
