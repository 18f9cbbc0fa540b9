/*
   Copyright 2026 The shardbench Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "shardbench/strategies.hpp"

namespace shardbench::cli {

/// Process exit codes. Stable across releases.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kIo = 3,
    kEmptyInput = 4,
    kLimitViolation = 5,
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a compact strategy spec as used by `compare --strategy`:
///   letter[:LEVELS]  ascii-sum[:M1,M2,...]  md5[:M1,M2,...][@raw]
///   mapping:BUCKET_SIZE,SERVERS
/// Throws Error(InvalidConfig) on malformed input.
Strategy parse_strategy_spec(std::string_view spec);

}  // namespace shardbench::cli
