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

#include "stablepairs/cli/instance_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace stablepairs::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw SchemaError(field + ": " + message);
}

std::string index_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

Rational rational_field(const json& node, const std::string& field) {
  if (node.is_number_integer()) {
    return node.is_number_unsigned() ? Rational(node.get<std::uint64_t>()) : Rational(node.get<std::int64_t>());
  }
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const InputError& e) {
      fail(field, e.what());
    }
  }
  fail(field, "expected an integer or a rational string such as \"-3\" or \"1/2\"");
}

std::int64_t integer_field(const json& node, const std::string& field) {
  const Rational r = rational_field(node, field);
  if (denominator(r) != 1) fail(field, "expected an integer, got " + to_string(r));
  try {
    return to_int64(numerator(r));
  } catch (const InputError&) {
    fail(field, "integer out of 64-bit range");
  }
}

std::int64_t positive_field(const json& node, const std::string& field) {
  const auto v = integer_field(node, field);
  if (v < 1) fail(field, "expected a positive integer, got " + std::to_string(v));
  return v;
}

const json& array_field(const json& node, const std::string& field) {
  if (!node.is_array()) fail(field, "expected an array");
  return node;
}

std::vector<Weight> weight_list(const json& node, const std::string& field, int dim) {
  array_field(node, field);
  if (node.empty()) fail(field, "must be nonempty");
  std::vector<Weight> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto path = index_path(field, i);
    array_field(node[i], path);
    if (static_cast<int>(node[i].size()) != dim) {
      fail(path, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(node[i].size()));
    }
    std::vector<std::int64_t> c;
    for (std::size_t k = 0; k < node[i].size(); ++k) c.push_back(integer_field(node[i][k], index_path(path, k)));
    out.emplace_back(std::move(c));
  }
  return out;
}

std::vector<RationalVector> point_list(const json& node, const std::string& field, int dim) {
  array_field(node, field);
  if (node.empty()) fail(field, "must be nonempty");
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto path = index_path(field, i);
    array_field(node[i], path);
    if (static_cast<int>(node[i].size()) != dim) {
      fail(path, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(node[i].size()));
    }
    RationalVector p;
    for (std::size_t k = 0; k < node[i].size(); ++k) p.push_back(rational_field(node[i][k], index_path(path, k)));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<double> coefficient_list(const json& node, const std::string& field, std::size_t expected) {
  array_field(node, field);
  if (node.size() != expected) {
    fail(field, "expected " + std::to_string(expected) + " coefficients (one per support weight), got " +
                    std::to_string(node.size()));
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto path = index_path(field, i);
    double c = 0.0;
    if (node[i].is_number()) {
      c = node[i].get<double>();
    } else if (node[i].is_string()) {
      const auto s = node[i].get<std::string>();
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), c);
      if (ec != std::errc() || ptr != s.data() + s.size()) fail(path, "not a number: \"" + s + "\"");
    } else {
      fail(path, "expected a positive real");
    }
    if (!(c > 0) || !std::isfinite(c)) fail(path, "coefficient magnitudes must be positive and finite");
    out.push_back(c);
  }
  return out;
}

void reject_unknown(const json& node, const std::string& where, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : node.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(where.empty() ? key : where + "." + key, "unknown field");
    }
  }
}

void require_distinct(const std::vector<Weight>& weights, const std::string& field) {
  std::set<Weight> seen;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!seen.insert(weights[i]).second) {
      fail(index_path(field, i), "duplicate weight " + to_string(weights[i]) + " while coefficients are given");
    }
  }
}

FrameSpec parse_frame(const json& node, const std::string& path, int dim) {
  if (!node.is_object()) fail(path, "expected an object");
  reject_unknown(node, path, {"v_support", "w_support", "v_coeffs", "w_coeffs"});
  FrameSpec frame;
  for (const char* key : {"v_support", "w_support"}) {
    if (!node.contains(key)) fail(path + "." + key, "missing");
  }
  frame.v_support = weight_list(node["v_support"], path + ".v_support", dim);
  frame.w_support = weight_list(node["w_support"], path + ".w_support", dim);
  if (node.contains("v_coeffs")) {
    require_distinct(frame.v_support, path + ".v_support");
    frame.v_coeffs = coefficient_list(node["v_coeffs"], path + ".v_coeffs", frame.v_support.size());
  }
  if (node.contains("w_coeffs")) {
    require_distinct(frame.w_support, path + ".w_support");
    frame.w_coeffs = coefficient_list(node["w_coeffs"], path + ".w_coeffs", frame.w_support.size());
  }
  return frame;
}

// nlohmann reports "[json.exception.parse_error.101] parse error at line 3, column 5: ...".
std::string strip_exception_tag(const std::string& what) {
  const auto close = what.find("] ");
  return close == std::string::npos ? what : what.substr(close + 2);
}

ordered_json integers(std::span<const std::int64_t> c) {
  ordered_json out = ordered_json::array();
  for (auto x : c) out.push_back(std::to_string(x));
  return out;
}

ordered_json weight_array(const std::vector<Weight>& ws) {
  ordered_json out = ordered_json::array();
  for (const auto& w : ws) out.push_back(integers(w.coords()));
  return out;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(strip_exception_tag(e.what()));
  }
  if (!root.is_object()) fail("(root)", "expected a JSON object");
  reject_unknown(root, "", {"mode", "rank", "matrix_size", "q", "identity_polytope", "rep_weights", "frames"});

  InstanceFile file;
  if (!root.contains("mode") || !root["mode"].is_string()) fail("mode", "expected \"free\" or \"sl\"");
  const auto mode = root["mode"].get<std::string>();
  if (mode == "free") {
    if (root.contains("matrix_size")) fail("matrix_size", "not allowed in free mode (use rank)");
    if (!root.contains("rank")) fail("rank", "missing (required in free mode)");
    file.context = LatticeContext::free_torus(static_cast<int>(positive_field(root["rank"], "rank")));
    if (root.contains("rep_weights")) fail("rep_weights", "only allowed in sl mode");
    if (!root.contains("q")) fail("q", "missing (required in free mode)");
    if (!root.contains("identity_polytope")) fail("identity_polytope", "missing (required in free mode)");
  } else if (mode == "sl") {
    if (root.contains("rank")) fail("rank", "not allowed in sl mode (use matrix_size)");
    if (!root.contains("matrix_size")) fail("matrix_size", "missing (required in sl mode)");
    const auto n = positive_field(root["matrix_size"], "matrix_size");
    if (n < 2) fail("matrix_size", "must be at least 2");
    file.context = LatticeContext::special_linear(static_cast<int>(n));
    if (root.contains("identity_polytope")) fail("identity_polytope", "not allowed in sl mode (N(I) is the standard simplex)");
    if (root.contains("q") == root.contains("rep_weights")) fail("q", "sl mode needs exactly one of q and rep_weights");
  } else {
    fail("mode", "expected \"free\" or \"sl\", got \"" + mode + "\"");
  }
  const int dim = file.context.ambient_dim();

  if (root.contains("q")) file.q = positive_field(root["q"], "q");
  if (root.contains("identity_polytope")) file.identity_polytope = point_list(root["identity_polytope"], "identity_polytope", dim);
  if (root.contains("rep_weights")) file.rep_weights = weight_list(root["rep_weights"], "rep_weights", dim);

  if (!root.contains("frames")) fail("frames", "missing");
  const auto& frames = array_field(root["frames"], "frames");
  if (frames.empty()) fail("frames", "must be nonempty");
  for (std::size_t i = 0; i < frames.size(); ++i) {
    file.frames.push_back(parse_frame(frames[i], index_path("frames", i), dim));
  }
  // Catch geometric violations (N(v) outside q N(I) and friends) at load time.
  build_family(file);
  return file;
}

InstanceFile load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

nlohmann::ordered_json to_json(const InstanceFile& file) {
  ordered_json root;
  const auto& ctx = file.context;
  if (ctx.mode() == LatticeMode::free) {
    root["mode"] = "free";
    root["rank"] = std::to_string(ctx.ambient_dim());
  } else {
    root["mode"] = "sl";
    root["matrix_size"] = std::to_string(ctx.ambient_dim());
  }
  if (file.q) root["q"] = std::to_string(*file.q);
  if (file.identity_polytope) {
    ordered_json pts = ordered_json::array();
    for (const auto& p : *file.identity_polytope) {
      ordered_json row = ordered_json::array();
      for (const auto& x : p) row.push_back(to_string(x));
      pts.push_back(std::move(row));
    }
    root["identity_polytope"] = std::move(pts);
  }
  if (file.rep_weights) root["rep_weights"] = weight_array(*file.rep_weights);
  ordered_json frames = ordered_json::array();
  for (const auto& f : file.frames) {
    ordered_json frame;
    frame["v_support"] = weight_array(f.v_support);
    frame["w_support"] = weight_array(f.w_support);
    if (f.v_coeffs) frame["v_coeffs"] = *f.v_coeffs;
    if (f.w_coeffs) frame["w_coeffs"] = *f.w_coeffs;
    frames.push_back(std::move(frame));
  }
  root["frames"] = std::move(frames);
  return root;
}

std::string serialize(const InstanceFile& file) { return to_json(file).dump(2) + "\n"; }

std::int64_t effective_q(const InstanceFile& file) {
  if (file.q) return *file.q;
  if (!file.rep_weights) throw SchemaError("q: missing and no rep_weights to derive it from");
  try {
    return deg_of_V(WeightSupport(file.context, *file.rep_weights));
  } catch (const InputError& e) {
    fail("rep_weights", e.what());
  }
}

PairInstance build_frame(const InstanceFile& file, std::size_t index) {
  if (index >= file.frames.size()) {
    throw SchemaError("frame index " + std::to_string(index) + " out of range (file has " +
                      std::to_string(file.frames.size()) + " frames)");
  }
  const auto& f = file.frames[index];
  const auto path = index_path("frames", index);
  try {
    std::optional<RationalPolytope> identity;
    if (file.identity_polytope) identity = RationalPolytope(*file.identity_polytope);
    return PairInstance(WeightSupport(file.context, f.v_support), WeightSupport(file.context, f.w_support),
                        effective_q(file), std::move(identity));
  } catch (const SchemaError&) {
    throw;
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

FrameFamily build_family(const InstanceFile& file) {
  std::vector<PairInstance> frames;
  for (std::size_t i = 0; i < file.frames.size(); ++i) frames.push_back(build_frame(file, i));
  return FrameFamily(std::move(frames));
}

}  // namespace stablepairs::cli
