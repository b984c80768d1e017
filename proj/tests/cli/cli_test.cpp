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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "stablepairs/cli/commands.hpp"
#include "stablepairs/cli/corpus.hpp"
#include "stablepairs/cli/instance_file.hpp"

namespace stablepairs::cli {
namespace {

const std::string kData = STABLEPAIRS_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "stablepairs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

TEST(Check, Fixtures) {
  auto b = invoke({"check", data("fix_b.json"), "--format", "json"});
  EXPECT_EQ(b.code, kStable);
  EXPECT_EQ(b.out, "{\"semistable\":true,\"stable\":true,\"uniform_m\":2}\n");

  auto c = invoke({"check", data("fix_c.json"), "--format", "json"});
  EXPECT_EQ(c.code, kSemistableOnly);
  EXPECT_NE(c.out.find("\"witness\":[0,-1]"), std::string::npos);

  EXPECT_EQ(invoke({"check", data("fix_a.json")}).code, kStable);
  auto d = invoke({"check", data("fix_d.json")});
  EXPECT_EQ(d.code, kUnstable);
  EXPECT_NE(d.out.find("witness: [-1,0]"), std::string::npos);

  auto bc = invoke({"check", data("fix_bc.json"), "--format", "json"});
  EXPECT_EQ(bc.code, kSemistableOnly);
  EXPECT_NE(bc.out.find("\"frame_index\":1"), std::string::npos);
}

TEST(Check, SchemaErrorsExitTwoWithLocation) {
  auto empty = invoke({"check", data("empty_v_support.json")});
  EXPECT_EQ(empty.code, kInvalid);
  EXPECT_NE(empty.err.find("frames[0].v_support"), std::string::npos);

  auto syntax = invoke({"check", data("syntax_error.json")});
  EXPECT_EQ(syntax.code, kInvalid);
  EXPECT_NE(syntax.err.find("line 5"), std::string::npos);

  EXPECT_EQ(invoke({"check", data("no_such_file.json")}).code, kInvalid);
  EXPECT_EQ(invoke({"check"}).code, kInvalid);
  EXPECT_EQ(invoke({}).code, kInvalid);
  EXPECT_EQ(invoke({"check", data("fix_b.json"), "--format", "yaml"}).code, kInvalid);
}

TEST(ParseInstance, FieldDiagnostics) {
  auto message = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const SchemaError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  const std::string triangle = R"("identity_polytope": [["1","0"],["0","1"],["-1","-1"]])";
  EXPECT_NE(message(R"({"mode":"free","rank":2,"q":1,)" + triangle +
                    R"(,"frames":[{"v_support":[[0,0,1]],"w_support":[[0,0]]}]})")
                .find("frames[0].v_support[0]"),
            std::string::npos);
  EXPECT_NE(message(R"({"mode":"free","rank":2,"q":1,)" + triangle +
                    R"(,"frames":[{"v_support":[["1/2","0"]],"w_support":[[0,0]]}]})")
                .find("frames[0].v_support[0][0]"),
            std::string::npos);
  EXPECT_NE(message(R"({"mode":"free","rank":2,"q":1,)" + triangle +
                    R"(,"frames":[{"v_support":[[5,0]],"w_support":[[0,0]]}]})")
                .find("not contained in q N(I)"),
            std::string::npos);
  EXPECT_NE(message(R"({"mode":"sl","matrix_size":2,"frames":[{"v_support":[[0,0]],"w_support":[[0,0]]}]})")
                .find("exactly one of q and rep_weights"),
            std::string::npos);
  EXPECT_NE(message(R"({"mode":"sl","matrix_size":2,"q":1,)" + triangle +
                    R"(,"frames":[{"v_support":[[0,0]],"w_support":[[0,0]]}]})")
                .find("identity_polytope"),
            std::string::npos);
  EXPECT_NE(message(R"({"mode":"free","rank":2,"q":1,)" + triangle +
                    R"(,"frames":[{"v_support":[[0,0]],"w_support":[[0,0]],"v_coeffs":[1,2]}]})")
                .find("frames[0].v_coeffs"),
            std::string::npos);
  EXPECT_NE(message(R"({"mode":"free","rank":2,"q":1,"colour":"red",)" + triangle +
                    R"(,"frames":[{"v_support":[[0,0]],"w_support":[[0,0]]}]})")
                .find("colour: unknown field"),
            std::string::npos);
  EXPECT_NE(message(R"({"mode":"gl","frames":[]})").find("mode"), std::string::npos);
}

TEST(ParseInstance, RoundTripsThroughSerialize) {
  const auto file = load_instance(data("rep_weights.json"));
  EXPECT_EQ(effective_q(file), 2);
  const auto text = serialize(file);
  EXPECT_EQ(serialize(parse_instance(text)), text);
  ASSERT_TRUE(parse_instance(text).frames[0].w_coeffs);
  EXPECT_EQ((*parse_instance(text).frames[0].w_coeffs)[1], 1000.0);
}

TEST(MinM, Fixtures) {
  EXPECT_EQ(invoke({"min-m", data("fix_b.json")}).out, "2\n");
  EXPECT_EQ(invoke({"min-m", data("fix_a.json")}).out, "1\n");
  EXPECT_EQ(invoke({"min-m", data("fix_c.json")}).out, "none\n");
  EXPECT_EQ(invoke({"min-m", data("fix_c.json"), "--format", "json"}).out, "{\"uniform_m\":null}\n");
}

TEST(Witness, Fixtures) {
  EXPECT_EQ(invoke({"witness", data("fix_c.json")}).out, "[0,-1] violates stability in frame 0\n");
  EXPECT_EQ(invoke({"witness", data("fix_d.json")}).out, "[-1,0] violates semistability in frame 0\n");
  EXPECT_EQ(invoke({"witness", data("fix_b.json")}).out, "none (stable)\n");
}

TEST(Degenerate, Examples) {
  EXPECT_EQ(invoke({"degenerate", data("degenerate.json"), "--keep", "3"}).out, "[1,1]\n");
  const auto both = invoke({"degenerate", data("degenerate.json"), "--keep", "1,2"});
  EXPECT_EQ(both.out, "[-1,-1]\n");
  EXPECT_EQ(invoke({"degenerate", data("fix_b.json"), "--keep", "1", "--support", "w"}).out, "[-1,0]\n");
  EXPECT_EQ(invoke({"degenerate", data("fix_b.json"), "--keep", "1,2", "--support", "w"}).out,
            "unreachable\n");
  EXPECT_EQ(invoke({"degenerate", data("degenerate.json"), "--keep", "4"}).code, kInvalid);
  EXPECT_EQ(invoke({"degenerate", data("degenerate.json"), "--keep", "0"}).code, kInvalid);
  EXPECT_EQ(invoke({"degenerate", data("degenerate.json"), "--keep", "x"}).code, kInvalid);
  EXPECT_EQ(invoke({"degenerate", data("degenerate.json"), "--keep", "1", "--frame", "3"}).code, kInvalid);
}

TEST(Slope, Examples) {
  EXPECT_EQ(invoke({"slope", data("fix_b.json"), "--lambda", "0,1"}).out, "slope ≈ -1.000000; exact -1\n");
  EXPECT_EQ(invoke({"slope", data("fix_d.json"), "--lambda=-1,0"}).out, "slope ≈ 1.000000; exact 1\n");
  EXPECT_EQ(invoke({"slope", data("rep_weights.json"), "--lambda", "1,-1"}).out, "slope ≈ -1.000000; exact -1\n");
  EXPECT_EQ(invoke({"slope", data("fix_a.json"), "--lambda", "1,1"}).code, kInvalid);
  EXPECT_EQ(invoke({"slope", data("fix_b.json"), "--lambda", "1,1,1"}).code, kInvalid);
  EXPECT_EQ(invoke({"slope", data("fix_b.json"), "--lambda", "0,0"}).code, kInvalid);
}

TEST(Corpus, DeterministicAndValid) {
  const std::vector<std::string> args{"corpus", "--dim", "2", "--max-coord", "3", "--count", "5", "--seed", "7"};
  const auto first = invoke(args);
  const auto second = invoke(args);
  EXPECT_EQ(first.code, kStable);
  EXPECT_EQ(first.out, second.out);
  std::istringstream lines(first.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    EXPECT_NO_THROW(parse_instance(line));
    ++n;
  }
  EXPECT_EQ(n, 5);
  EXPECT_NE(invoke({"corpus", "--dim", "2", "--max-coord", "3", "--count", "5", "--seed", "8"}).out, first.out);
}

TEST(Corpus, EveryGeneratedFileValidates) {
  for (auto mode : {LatticeMode::free, LatticeMode::sl}) {
    for (int dim = mode == LatticeMode::sl ? 2 : 1; dim <= 4; ++dim) {
      const auto files = generate_corpus({dim, 3, 40, 99, mode});
      for (const auto& f : files) EXPECT_NO_THROW(parse_instance(serialize(f)));
    }
  }
}

TEST(Corpus, WritesFilesToDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "stablepairs_cli_test_corpus";
  std::filesystem::remove_all(dir);
  const auto r = invoke({"corpus", "--dim", "3", "--max-coord", "1", "--count", "3", "--seed", "1",
                         "--mode", "sl", "--out", dir.string()});
  EXPECT_EQ(r.code, kStable);
  for (int i = 0; i < 3; ++i) {
    const auto path = dir / ("instance_000" + std::to_string(i) + ".json");
    ASSERT_TRUE(std::filesystem::exists(path));
    EXPECT_EQ(invoke({"check", path.string()}).code == kInvalid, false);
  }
  std::filesystem::remove_all(dir);
}

TEST(Corpus, RejectsBadOptions) {
  EXPECT_EQ(invoke({"corpus", "--dim", "1", "--max-coord", "3", "--count", "1", "--mode", "sl"}).code, kInvalid);
  EXPECT_EQ(invoke({"corpus", "--dim", "0", "--max-coord", "3", "--count", "1"}).code, kInvalid);
  EXPECT_EQ(invoke({"corpus", "--dim", "2", "--count", "1"}).code, kInvalid);
}

TEST(CorpusRng, StaysInRangeAndHitsEnds) {
  CorpusRng rng(5);
  bool lo = false, hi = false;
  for (int i = 0; i < 2000; ++i) {
    const auto x = rng.uniform(-3, 3);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 3);
    lo = lo || x == -3;
    hi = hi || x == 3;
  }
  EXPECT_TRUE(lo && hi);
  EXPECT_EQ(rng.uniform(4, 4), 4);
}

}  // namespace
}  // namespace stablepairs::cli
