// Copyright 2026 The coloc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace coloc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;  // violation, mismatch, non-split
inline constexpr int kExitUsage = 2;    // usage and parse errors

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err; the coalgebra is read from --in or, by default, in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace coloc
