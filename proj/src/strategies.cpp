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

#include "shardbench/strategies.hpp"

#include <string>

#include "shardbench/error.hpp"

namespace shardbench {

namespace {

std::string join_moduli(std::span<const std::uint32_t> moduli) {
    std::string out;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(moduli[i]);
    }
    return out;
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

LetterConfig::LetterConfig(int levels) : levels_(levels) {
    if (levels < 1 || levels > kMaxLevels) {
        throw Error(ErrorCode::InvalidConfig, "letter levels must be in 1..6");
    }
}

AsciiSumConfig::AsciiSumConfig(std::vector<std::uint32_t> level_moduli)
    : moduli_(std::move(level_moduli)) {
    if (moduli_.empty()) {
        throw Error(ErrorCode::InvalidConfig, "ascii-sum needs at least one modulus");
    }
    for (auto m : moduli_) {
        if (m == 0) throw Error(ErrorCode::InvalidConfig, "ascii-sum moduli must be positive");
    }
}

MappingConfig::MappingConfig(std::uint64_t bucket_size, std::uint64_t num_servers)
    : bucket_size_(bucket_size), num_servers_(num_servers) {
    if (bucket_size == 0) throw Error(ErrorCode::InvalidConfig, "bucket size must be positive");
    if (num_servers == 0) throw Error(ErrorCode::InvalidConfig, "server count must be positive");
}

Md5Config::Md5Config(std::vector<std::uint32_t> level_moduli, Md5Input input)
    : moduli_(std::move(level_moduli)), input_(input) {
    if (moduli_.empty() || moduli_.size() > kMaxLevels) {
        throw Error(ErrorCode::InvalidConfig, "md5 needs 1..16 moduli");
    }
    for (auto m : moduli_) {
        if (m < 2 || m > 256) {
            throw Error(ErrorCode::InvalidConfig, "md5 moduli must be in 2..256");
        }
    }
}

Placement letter_placement(const Username& u, const LetterConfig& cfg) {
    Placement p;
    std::size_t depth = std::min<std::size_t>(static_cast<std::size_t>(cfg.levels()), u.size());
    p.levels.reserve(depth);
    for (std::size_t k = 0; k < depth; ++k) {
        p.levels.push_back({char_index(u[k]), kAlphabetSize});
    }
    return p;
}

std::uint64_t ascii_sum(const Username& u, std::size_t drop) {
    if (drop >= u.size()) {
        throw Error(ErrorCode::NothingToSum, "nothing left to sum after dropping " +
                                                 std::to_string(drop) + " characters");
    }
    std::uint64_t sum = 0;
    for (std::size_t i = drop; i < u.size(); ++i) sum += static_cast<unsigned char>(u[i]);
    return sum;
}

Placement ascii_sum_placement(const Username& u, const AsciiSumConfig& cfg) {
    auto moduli = cfg.level_moduli();
    std::size_t depth = std::min(u.size(), moduli.size());
    Placement p;
    p.levels.reserve(depth);
    for (std::size_t k = 0; k < depth; ++k) {
        p.levels.push_back({ascii_sum(u, k) % moduli[k], moduli[k]});
    }
    return p;
}

CounterSlot counter_placement(std::uint64_t member_id, const MappingConfig& cfg) {
    if (member_id == 0) throw Error(ErrorCode::InvalidConfig, "member IDs start at 1");
    std::uint64_t bucket = (member_id - 1) / cfg.bucket_size();
    return {bucket, bucket % cfg.num_servers()};
}

Md5::Digest md5_bytes(const Username& u, Md5Input input) noexcept {
    Md5 md5;
    md5.update(u.view());
    if (input == Md5Input::NewlineTerminated) md5.update(std::string_view("\n"));
    return md5.digest();
}

HexDigest md5_digest(const Username& u, Md5Input input) noexcept {
    return HexDigest::from_bytes(md5_bytes(u, input));
}

Placement md5_placement(const Username& u, const Md5Config& cfg) {
    HexDigest digest = md5_digest(u, cfg.input());
    auto moduli = cfg.level_moduli();
    Placement p;
    p.levels.reserve(moduli.size());
    for (std::size_t k = 0; k < moduli.size(); ++k) {
        p.levels.push_back({hex_pair_value(digest, k) % moduli[k], moduli[k]});
    }
    return p;
}

std::string strategy_name(const Strategy& s) {
    return std::visit(Overloaded{[](const LetterConfig&) { return std::string("letter"); },
                                 [](const AsciiSumConfig&) { return std::string("ascii-sum"); },
                                 [](const MappingConfig&) { return std::string("mapping"); },
                                 [](const Md5Config&) { return std::string("md5"); }},
                      s);
}

std::string describe_config(const Strategy& s) {
    return std::visit(
        Overloaded{
            [](const LetterConfig& c) { return "levels=" + std::to_string(c.levels()); },
            [](const AsciiSumConfig& c) { return "moduli=" + join_moduli(c.level_moduli()); },
            [](const MappingConfig& c) {
                return "bucket_size=" + std::to_string(c.bucket_size()) +
                       ",servers=" + std::to_string(c.num_servers());
            },
            [](const Md5Config& c) {
                std::string out = "moduli=" + join_moduli(c.level_moduli());
                if (c.input() == Md5Input::Raw) out += ",input=raw";
                return out;
            }},
        s);
}

std::vector<std::uint64_t> level_moduli(const Strategy& s) {
    return std::visit(
        Overloaded{
            [](const LetterConfig& c) {
                return std::vector<std::uint64_t>(static_cast<std::size_t>(c.levels()),
                                                  kAlphabetSize);
            },
            [](const AsciiSumConfig& c) {
                auto m = c.level_moduli();
                return std::vector<std::uint64_t>(m.begin(), m.end());
            },
            [](const MappingConfig& c) { return std::vector<std::uint64_t>{c.num_servers()}; },
            [](const Md5Config& c) {
                auto m = c.level_moduli();
                return std::vector<std::uint64_t>(m.begin(), m.end());
            }},
        s);
}

Placement place(const Username& u, std::uint64_t member_id, const Strategy& s) {
    return std::visit(
        Overloaded{[&](const LetterConfig& c) { return letter_placement(u, c); },
                   [&](const AsciiSumConfig& c) { return ascii_sum_placement(u, c); },
                   [&](const MappingConfig& c) {
                       auto slot = counter_placement(member_id, c);
                       return Placement{{{slot.server, c.num_servers()}}};
                   },
                   [&](const Md5Config& c) { return md5_placement(u, c); }},
        s);
}

std::optional<std::uint64_t> joint_bucket(const Username& u, std::uint64_t member_id,
                                          const Strategy& s, std::size_t level) {
    using Result = std::optional<std::uint64_t>;
    return std::visit(
        Overloaded{
            [&](const LetterConfig& c) -> Result {
                if (level >= static_cast<std::size_t>(c.levels()) || level >= u.size()) {
                    return std::nullopt;
                }
                std::uint64_t joint = 0;
                for (std::size_t k = 0; k <= level; ++k) {
                    joint = joint * kAlphabetSize +
                            static_cast<std::uint64_t>(try_char_index(u[k]));
                }
                return joint;
            },
            [&](const AsciiSumConfig& c) -> Result {
                auto moduli = c.level_moduli();
                if (level >= moduli.size() || level >= u.size()) return std::nullopt;
                // Level k sums the suffix starting at k; accumulate from the
                // right so every suffix sum costs one addition.
                std::uint64_t suffix = 0;
                for (std::size_t i = u.size(); i-- > level + 1;) {
                    suffix += static_cast<unsigned char>(u[i]);
                }
                std::uint64_t joint = 0;
                std::uint64_t stride = 1;
                for (std::size_t k = level + 1; k-- > 0;) {
                    suffix += static_cast<unsigned char>(u[k]);
                    joint += (suffix % moduli[k]) * stride;
                    stride *= moduli[k];
                }
                return joint;
            },
            [&](const MappingConfig& c) -> Result {
                if (level > 0) return std::nullopt;
                return counter_placement(member_id, c).server;
            },
            [&](const Md5Config& c) -> Result {
                auto moduli = c.level_moduli();
                if (level >= moduli.size()) return std::nullopt;
                Md5::Digest bytes = md5_bytes(u, c.input());
                std::uint64_t joint = 0;
                for (std::size_t k = 0; k <= level; ++k) {
                    // Hex pair k is exactly digest byte k.
                    joint = joint * moduli[k] + bytes[k] % moduli[k];
                }
                return joint;
            }},
        s);
}

}  // namespace shardbench
