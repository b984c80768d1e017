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

#include "stablepairs/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stablepairs/cli/corpus.hpp"
#include "stablepairs/cli/instance_file.hpp"
#include "stablepairs/degeneration.hpp"
#include "stablepairs/numeric.hpp"

namespace stablepairs::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string path;
  std::string format = "text";
  std::string keep;
  std::string lambda;
  std::string support = "v";
  std::size_t frame = 0;
  CorpusOptions corpus;
  std::string mode = "free";
  std::string out_dir;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    std::int64_t value = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last) {
      throw SchemaError(flag + ": expected comma-separated integers, got \"" + text + "\"");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

ordered_json vector_json(const OneParamSubgroup& lam) {
  return ordered_json(std::vector<std::int64_t>(lam.coords().begin(), lam.coords().end()));
}

std::string vector_text(const OneParamSubgroup& lam) {
  std::string s = "[";
  for (std::size_t i = 0; i < lam.size(); ++i) s += (i ? "," : "") + std::to_string(lam[i]);
  return s + "]";
}

const char* clause_name(Clause c) { return c == Clause::semistability ? "semistability" : "stability"; }

int exit_code(const StabilityVerdict& v) {
  if (v.stable) return kStable;
  return v.semistable ? kSemistableOnly : kUnstable;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto v = verdict(build_family(load_instance(o.path)));
  if (o.format == "json") {
    ordered_json j;
    j["semistable"] = v.semistable;
    j["stable"] = v.stable;
    if (v.uniform_m) j["uniform_m"] = *v.uniform_m;
    if (v.witness) {
      j["witness"] = vector_json(*v.witness);
      j["violated"] = clause_name(*v.violated);
      j["frame_index"] = *v.frame_index;
    }
    out << j.dump() << "\n";
  } else {
    out << "semistable: " << (v.semistable ? "true" : "false") << "\n";
    out << "stable: " << (v.stable ? "true" : "false") << "\n";
    if (v.uniform_m) out << "uniform_m: " << *v.uniform_m << "\n";
    if (v.witness) {
      out << "witness: " << vector_text(*v.witness) << "\n";
      out << "violated: " << clause_name(*v.violated) << "\n";
      out << "frame_index: " << *v.frame_index << "\n";
    }
  }
  return exit_code(v);
}

int cmd_min_m(const Options& o, std::ostream& out) {
  const auto v = verdict(build_family(load_instance(o.path)));
  if (o.format == "json") {
    ordered_json j;
    j["uniform_m"] = v.uniform_m ? ordered_json(*v.uniform_m) : ordered_json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << (v.uniform_m ? std::to_string(*v.uniform_m) : "none") << "\n";
  }
  return kStable;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const auto v = verdict(build_family(load_instance(o.path)));
  if (o.format == "json") {
    ordered_json j;
    if (v.witness) {
      j["witness"] = vector_json(*v.witness);
      j["violated"] = clause_name(*v.violated);
      j["frame_index"] = *v.frame_index;
    } else {
      j["witness"] = nullptr;
    }
    out << j.dump() << "\n";
  } else if (v.witness) {
    out << vector_text(*v.witness) << " violates " << clause_name(*v.violated) << " in frame "
        << *v.frame_index << "\n";
  } else {
    out << "none (stable)\n";
  }
  return kStable;
}

int cmd_degenerate(const Options& o, std::ostream& out) {
  const auto file = load_instance(o.path);
  const auto p = build_frame(file, o.frame);
  const auto& support = o.support == "w" ? p.w() : p.v();
  std::vector<std::size_t> keep;
  for (auto k : parse_int_list(o.keep, "--keep")) {
    if (k < 1 || static_cast<std::size_t>(k) > support.size()) {
      throw SchemaError("--keep: index " + std::to_string(k) + " out of range 1.." + std::to_string(support.size()));
    }
    keep.push_back(static_cast<std::size_t>(k - 1));
  }
  const auto lam = find_degeneration(DegenerationProblem(support, std::move(keep)));
  if (o.format == "json") {
    ordered_json j;
    j["lambda"] = lam ? vector_json(*lam) : ordered_json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << (lam ? vector_text(*lam) : "unreachable") << "\n";
  }
  return kStable;
}

numeric::CoefficientVector coefficients(const WeightSupport& s, const std::optional<std::vector<double>>& c) {
  return c ? numeric::CoefficientVector(s, *c) : numeric::CoefficientVector::unit(s);
}

int cmd_slope(const Options& o, std::ostream& out) {
  const auto file = load_instance(o.path);
  const auto p = build_frame(file, o.frame);
  const OneParamSubgroup lam(parse_int_list(o.lambda, "--lambda"));
  if (static_cast<int>(lam.size()) != p.context().ambient_dim()) {
    throw SchemaError("--lambda: expected " + std::to_string(p.context().ambient_dim()) + " entries");
  }
  const auto& listed = file.frames[o.frame];
  const double slope = numeric::slope_along(lam, coefficients(p.v(), listed.v_coeffs), coefficients(p.w(), listed.w_coeffs));
  const auto exact = weight(lam, p.w()) - weight(lam, p.v());
  if (o.format == "json") {
    ordered_json j;
    j["slope"] = slope;
    j["exact"] = exact;
    out << j.dump() << "\n";
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", slope);
    std::string shown = buf;
    if (shown == "-0.000000") shown = "0.000000";
    out << "slope ≈ " << shown << "; exact " << exact << "\n";
  }
  return kStable;
}

int cmd_corpus(Options o, std::ostream& out) {
  o.corpus.mode = o.mode == "sl" ? LatticeMode::sl : LatticeMode::free;
  const auto files = generate_corpus(o.corpus);
  if (o.out_dir.empty()) {
    // One compact instance per line.
    for (const auto& f : files) out << to_json(f).dump() << "\n";
    return kStable;
  }
  const std::filesystem::path dir(o.out_dir);
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < files.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "instance_%04zu.json", i);
    const auto path = dir / name;
    std::ofstream f(path, std::ios::binary);
    f << serialize(files[i]);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    out << path.string() << "\n";
  }
  return kStable;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide K-(semi)stability of pairs of torus weight supports.", "stablepairs"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("path", o.path, "Instance file (JSON)")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto* check = app.add_subcommand("check", "Verdict for every frame; exit 0 stable, 3 semistable only, 4 unstable");
  add_file(check);
  auto* min_m = app.add_subcommand("min-m", "Least m with uniform stability, or none");
  add_file(min_m);
  auto* witness = app.add_subcommand("witness", "A destabilizing one-parameter subgroup, if any");
  add_file(witness);
  auto* degenerate = app.add_subcommand("degenerate", "Subgroup whose limit keeps exactly the given weights");
  add_file(degenerate);
  degenerate->add_option("--keep", o.keep, "1-based weight indices, comma-separated")->required();
  degenerate->add_option("--frame", o.frame, "0-based frame index");
  degenerate->add_option("--support", o.support, "Which support of the frame")->check(CLI::IsMember({"v", "w"}));
  auto* slope = app.add_subcommand("slope", "Numeric slope of p along lambda next to the exact weight difference");
  add_file(slope);
  slope->add_option("--lambda", o.lambda, "Comma-separated integer entries")->required();
  slope->add_option("--frame", o.frame, "0-based frame index");
  auto* corpus = app.add_subcommand("corpus", "Random valid instances, reproducible from the seed");
  corpus->add_option("--dim", o.corpus.dim, "Ambient dimension")->required()->check(CLI::Range(1, 16));
  corpus->add_option("--max-coord", o.corpus.max_coord, "Largest |coordinate|")->required()->check(CLI::Range(0, 1000));
  corpus->add_option("--count", o.corpus.count, "Number of instances")->required();
  corpus->add_option("--seed", o.corpus.seed, "RNG seed");
  corpus->add_option("--mode", o.mode, "Lattice mode")->check(CLI::IsMember({"free", "sl"}));
  corpus->add_option("--out", o.out_dir, "Write instance_NNNN.json files here instead of JSON lines on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*min_m) return cmd_min_m(o, out);
    if (*witness) return cmd_witness(o, out);
    if (*degenerate) return cmd_degenerate(o, out);
    if (*slope) return cmd_slope(o, out);
    return cmd_corpus(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ModeError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace stablepairs::cli
