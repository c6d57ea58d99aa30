// Copyright 2026 The qudit-epi Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qepi {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitFinding = 2 };

/// Runs one CLI invocation; `args` excludes the program name. Progress and
/// errors go to `err`; JSONL goes to --out or to `out` when --out is "-".
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qepi
