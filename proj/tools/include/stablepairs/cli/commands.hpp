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

#include <ostream>

namespace stablepairs::cli {

enum ExitCode : int {
  kStable = 0,
  kInternal = 1,
  kInvalid = 2,
  kSemistableOnly = 3,
  kUnstable = 4,
};

/// The whole command line; main() is a thin wrapper so tests can run it in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stablepairs::cli
