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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shardbench/md5.hpp"
#include "shardbench/placement.hpp"
#include "shardbench/username.hpp"

namespace shardbench {

/// Letter expansion: one directory level per leading character, mod 37.
class LetterConfig {
public:
    static constexpr int kMaxLevels = 6;

    /// Throws Error(InvalidConfig) unless 1 <= levels <= 6.
    explicit LetterConfig(int levels = kMaxLevels);

    int levels() const noexcept { return levels_; }

    friend bool operator==(const LetterConfig&, const LetterConfig&) = default;

private:
    int levels_;
};

/// Sum of character codes mod a per-level modulus; level k skips the
/// first k characters.
class AsciiSumConfig {
public:
    /// Throws Error(InvalidConfig) on an empty list or a zero modulus.
    explicit AsciiSumConfig(std::vector<std::uint32_t> level_moduli = {31, 33});

    std::span<const std::uint32_t> level_moduli() const noexcept { return moduli_; }

    friend bool operator==(const AsciiSumConfig&, const AsciiSumConfig&) = default;

private:
    std::vector<std::uint32_t> moduli_;
};

/// Counter-issued member IDs grouped into fixed-size buckets, buckets dealt
/// round-robin across servers.
class MappingConfig {
public:
    /// Throws Error(InvalidConfig) if either value is zero.
    MappingConfig(std::uint64_t bucket_size, std::uint64_t num_servers);

    std::uint64_t bucket_size() const noexcept { return bucket_size_; }
    std::uint64_t num_servers() const noexcept { return num_servers_; }

    friend bool operator==(const MappingConfig&, const MappingConfig&) = default;

private:
    std::uint64_t bucket_size_;
    std::uint64_t num_servers_;
};

/// Bytes fed to MD5 for a username.
enum class Md5Input {
    /// name followed by '\n', as `echo name | md5sum` hashes it. This is the
    /// framing behind the reference digest of "frank" (d268c8fe...).
    NewlineTerminated,
    /// the bare name bytes.
    Raw,
};

/// Level k reduces hex pair k of the username's MD5 digest by its modulus.
class Md5Config {
public:
    static constexpr std::size_t kMaxLevels = HexDigest::kPairs;

    /// Throws Error(InvalidConfig) unless 1..16 moduli, each in 2..256.
    explicit Md5Config(std::vector<std::uint32_t> level_moduli = {64, 64, 128},
                       Md5Input input = Md5Input::NewlineTerminated);

    std::span<const std::uint32_t> level_moduli() const noexcept { return moduli_; }
    Md5Input input() const noexcept { return input_; }

    friend bool operator==(const Md5Config&, const Md5Config&) = default;

private:
    std::vector<std::uint32_t> moduli_;
    Md5Input input_;
};

Placement letter_placement(const Username& u, const LetterConfig& cfg);

/// Sum of the byte values at positions drop..size(). Throws
/// Error(NothingToSum) when drop >= u.size().
std::uint64_t ascii_sum(const Username& u, std::size_t drop);

/// Depth is min(u.size(), number of moduli).
Placement ascii_sum_placement(const Username& u, const AsciiSumConfig& cfg);

struct CounterSlot {
    std::uint64_t bucket = 0;
    std::uint64_t server = 0;

    friend bool operator==(const CounterSlot&, const CounterSlot&) = default;
};

/// bucket = (id - 1) / bucket_size, server = bucket % num_servers.
/// IDs start at 1; throws Error(InvalidConfig) for id 0.
CounterSlot counter_placement(std::uint64_t member_id, const MappingConfig& cfg);

Md5::Digest md5_bytes(const Username& u, Md5Input input = Md5Input::NewlineTerminated) noexcept;
HexDigest md5_digest(const Username& u, Md5Input input = Md5Input::NewlineTerminated) noexcept;

inline std::uint32_t hex_pair_value(const HexDigest& d, std::size_t pair_index) {
    return d.pair_value(pair_index);
}

Placement md5_placement(const Username& u, const Md5Config& cfg);

using Strategy = std::variant<LetterConfig, AsciiSumConfig, MappingConfig, Md5Config>;

/// "letter", "ascii-sum", "mapping" or "md5".
std::string strategy_name(const Strategy& s);

/// Compact config echo, e.g. "levels=6", "moduli=64,64,128",
/// "bucket_size=10000,servers=20". Raw md5 input appends ",input=raw".
std::string describe_config(const Strategy& s);

/// Modulus of each level at full depth. Mapping has a single level keyed
/// by server.
std::vector<std::uint64_t> level_moduli(const Strategy& s);

inline std::size_t max_depth(const Strategy& s) { return level_moduli(s).size(); }

/// Placement of the member with the given name and counter ID. Only the
/// mapping strategy looks at `member_id`; the others only at the name.
Placement place(const Username& u, std::uint64_t member_id, const Strategy& s);

/// Row-major index of levels 0..=level in the joint bucket space, or nullopt
/// when the placement is shallower than `level + 1`. Equivalent to
/// linearizing place(), without materializing the Placement.
std::optional<std::uint64_t> joint_bucket(const Username& u, std::uint64_t member_id,
                                          const Strategy& s, std::size_t level);

}  // namespace shardbench
