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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace shardbench {

/// RFC 1321 message digest. Incremental: update() any number of times, then
/// digest() once.
class Md5 {
public:
    using Digest = std::array<std::uint8_t, 16>;

    Md5() noexcept;

    void update(std::span<const std::uint8_t> data) noexcept;
    void update(std::string_view data) noexcept;
    Digest digest() noexcept;

    static Digest of(std::string_view data) noexcept;

private:
    void transform(const std::uint8_t* block) noexcept;

    std::array<std::uint32_t, 4> state_;
    std::array<std::uint8_t, 64> buffer_{};
    std::uint64_t length_ = 0;  // bytes consumed so far
};

/// 32 lowercase hexadecimal characters.
class HexDigest {
public:
    static constexpr std::size_t kLength = 32;
    static constexpr std::size_t kPairs = kLength / 2;

    /// Throws Error(InvalidConfig) unless `hex` is 32 chars of [0-9a-f].
    explicit HexDigest(std::string_view hex);
    static HexDigest from_bytes(const Md5::Digest& bytes) noexcept;

    const std::string& str() const noexcept { return hex_; }

    /// Characters 2k and 2k+1 read as one base-16 integer, high nibble first.
    std::uint32_t pair_value(std::size_t pair_index) const;

    friend bool operator==(const HexDigest&, const HexDigest&) = default;

private:
    HexDigest() = default;
    std::string hex_;
};

/// MD5 of arbitrary bytes as lowercase hex.
HexDigest md5_hex(std::string_view data) noexcept;

}  // namespace shardbench
