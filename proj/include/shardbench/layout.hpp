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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "shardbench/placement.hpp"
#include "shardbench/strategies.hpp"
#include "shardbench/username.hpp"

namespace shardbench {

/// Root-relative storage location that always ends in the member's name, so
/// distinct names never share a path even when every bucket collides.
struct StoragePath {
    std::string root;
    std::vector<std::string> segments;
    std::string leaf;

    /// root, segments and leaf joined by '/'. A trailing '/' on root is not doubled.
    std::string render() const;

    friend bool operator==(const StoragePath&, const StoragePath&) = default;
};

/// One directory per leading character (at most max_depth), then the name.
StoragePath letter_path(const Username& u, const std::string& root, int max_depth = 6);

/// Decimal bucket index per md5 level, then the name: <root>/18/40/72/frank.
StoragePath md5_path(const Username& u, const Md5Config& cfg, const std::string& root);

/// Decimal rendering of any placement followed by `leaf`.
StoragePath placement_path(const Placement& p, const std::string& leaf, const std::string& root);

/// Inverse of the decimal segment rendering. Throws Error(InvalidConfig) on a
/// segment that is not a plain decimal integer.
std::vector<std::uint64_t> parse_bucket_segments(const StoragePath& path);

inline constexpr std::uint64_t kDefaultFanoutLimit = 64'000;

struct FanoutReport {
    std::vector<std::uint64_t> per_level_dirs;  // children of one directory at each level
    std::uint64_t dirs_under_one_top = 0;       // leaf buckets below one top-level directory
    std::uint64_t total_leaf_buckets = 0;       // product of all level moduli
    std::uint64_t limit = kDefaultFanoutLimit;
    bool ok = true;                             // every per-level count < limit
};

/// Per-directory fan-out check for a layout with the given per-level moduli.
/// Products saturate at UINT64_MAX.
FanoutReport fanout_report(std::span<const std::uint64_t> level_moduli,
                           std::uint64_t limit = kDefaultFanoutLimit);
FanoutReport fanout_report(const Md5Config& cfg, std::uint64_t limit = kDefaultFanoutLimit);
FanoutReport fanout_report(const LetterConfig& cfg, std::uint64_t limit = kDefaultFanoutLimit);

/// Creates every bucket directory of the layout under `root` (all levels,
/// no member directories). Throws Error(InvalidConfig) if the fan-out check
/// fails, Error(BucketSpaceTooLarge) above kMaxDenseBuckets leaves and
/// Error(Io) on filesystem errors. Returns the number of directories created
/// or already present.
std::uint64_t materialize_skeleton(const std::filesystem::path& root,
                                   std::span<const std::uint64_t> level_moduli,
                                   std::uint64_t limit = kDefaultFanoutLimit);

}  // namespace shardbench
