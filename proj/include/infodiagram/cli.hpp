// Copyright 2026 The Infodiagram Authors.
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

#include <iosfwd>
#include <string>
#include <vector>

namespace infodiagram::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsageOrIngestion = 2,
  kPrecondition = 3,
  kVerification = 4,
};

// Entry point of the `infodiagram` tool. Documents go to `out` when the
// output path is "-", diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infodiagram::cli
