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

#include <cstdint>
#include <vector>

namespace shardbench {

/// One level of a placement: `bucket` is always in [0, modulus).
struct LevelBucket {
    std::uint64_t bucket = 0;
    std::uint64_t modulus = 1;

    friend bool operator==(const LevelBucket&, const LevelBucket&) = default;
};

/// Per-level bucket indices for one member, outermost level first.
struct Placement {
    std::vector<LevelBucket> levels;

    std::size_t depth() const noexcept { return levels.size(); }

    friend bool operator==(const Placement&, const Placement&) = default;
};

}  // namespace shardbench
