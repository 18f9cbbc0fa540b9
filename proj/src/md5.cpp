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

#include "shardbench/md5.hpp"

#include <bit>
#include <cstring>

#include "shardbench/error.hpp"

namespace shardbench {

namespace {

// Per-round shift amounts and the integer parts of abs(sin(i + 1)) * 2^32.
constexpr std::array<std::uint32_t, 64> kShift = {
    7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22,
    5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20,
    4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23,
    6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21};

constexpr std::array<std::uint32_t, 64> kSine = {
    0xd76aa478, 0xe8c7b756, 0x242070db, 0xc1bdceee, 0xf57c0faf, 0x4787c62a,
    0xa8304613, 0xfd469501, 0x698098d8, 0x8b44f7af, 0xffff5bb1, 0x895cd7be,
    0x6b901122, 0xfd987193, 0xa679438e, 0x49b40821, 0xf61e2562, 0xc040b340,
    0x265e5a51, 0xe9b6c7aa, 0xd62f105d, 0x02441453, 0xd8a1e681, 0xe7d3fbc8,
    0x21e1cde6, 0xc33707d6, 0xf4d50d87, 0x455a14ed, 0xa9e3e905, 0xfcefa3f8,
    0x676f02d9, 0x8d2a4c8a, 0xfffa3942, 0x8771f681, 0x6d9d6122, 0xfde5380c,
    0xa4beea44, 0x4bdecfa9, 0xf6bb4b60, 0xbebfbc70, 0x289b7ec6, 0xeaa127fa,
    0xd4ef3085, 0x04881d05, 0xd9d4d039, 0xe6db99e5, 0x1fa27cf8, 0xc4ac5665,
    0xf4292244, 0x432aff97, 0xab9423a7, 0xfc93a039, 0x655b59c3, 0x8f0ccc92,
    0xffeff47d, 0x85845dd1, 0x6fa87e4f, 0xfe2ce6e0, 0xa3014314, 0x4e0811a1,
    0xf7537e82, 0xbd3af235, 0x2ad7d2bb, 0xeb86d391};

constexpr char kHexChars[] = "0123456789abcdef";

int hex_nibble(char c) noexcept {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return 10 + (c - 'a');
    return -1;
}

}  // namespace

Md5::Md5() noexcept : state_{0x67452301, 0xefcdab89, 0x98badcfe, 0x10325476} {}

void Md5::transform(const std::uint8_t* block) noexcept {
    std::uint32_t m[16];
    for (int i = 0; i < 16; ++i) {
        m[i] = static_cast<std::uint32_t>(block[4 * i]) |
               static_cast<std::uint32_t>(block[4 * i + 1]) << 8 |
               static_cast<std::uint32_t>(block[4 * i + 2]) << 16 |
               static_cast<std::uint32_t>(block[4 * i + 3]) << 24;
    }

    std::uint32_t a = state_[0], b = state_[1], c = state_[2], d = state_[3];
    for (std::uint32_t i = 0; i < 64; ++i) {
        std::uint32_t f;
        std::uint32_t g;
        if (i < 16) {
            f = (b & c) | (~b & d);
            g = i;
        } else if (i < 32) {
            f = (d & b) | (~d & c);
            g = (5 * i + 1) % 16;
        } else if (i < 48) {
            f = b ^ c ^ d;
            g = (3 * i + 5) % 16;
        } else {
            f = c ^ (b | ~d);
            g = (7 * i) % 16;
        }
        std::uint32_t rotated = std::rotl(a + f + kSine[i] + m[g], static_cast<int>(kShift[i]));
        a = d;
        d = c;
        c = b;
        b = b + rotated;
    }
    state_[0] += a;
    state_[1] += b;
    state_[2] += c;
    state_[3] += d;
}

void Md5::update(std::span<const std::uint8_t> data) noexcept {
    std::size_t used = length_ % 64;
    length_ += data.size();
    std::size_t offset = 0;

    if (used != 0) {
        std::size_t take = std::min<std::size_t>(64 - used, data.size());
        std::memcpy(buffer_.data() + used, data.data(), take);
        offset = take;
        if (used + take < 64) return;
        transform(buffer_.data());
    }
    for (; offset + 64 <= data.size(); offset += 64) transform(data.data() + offset);
    if (offset < data.size()) {
        std::memcpy(buffer_.data(), data.data() + offset, data.size() - offset);
    }
}

void Md5::update(std::string_view data) noexcept {
    update(std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

Md5::Digest Md5::digest() noexcept {
    std::uint64_t bit_length = length_ * 8;
    std::uint8_t pad[72] = {0x80};
    std::size_t used = length_ % 64;
    std::size_t pad_len = used < 56 ? 56 - used : 120 - used;
    for (int i = 0; i < 8; ++i) {
        pad[pad_len + i] = static_cast<std::uint8_t>(bit_length >> (8 * i));
    }
    update(std::span<const std::uint8_t>(pad, pad_len + 8));

    Digest out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out[4 * i + j] = static_cast<std::uint8_t>(state_[i] >> (8 * j));
        }
    }
    return out;
}

Md5::Digest Md5::of(std::string_view data) noexcept {
    Md5 md5;
    md5.update(data);
    return md5.digest();
}

HexDigest::HexDigest(std::string_view hex) {
    if (hex.size() != kLength) {
        throw Error(ErrorCode::InvalidConfig, "hex digest must have 32 characters");
    }
    for (char c : hex) {
        if (hex_nibble(c) < 0) {
            throw Error(ErrorCode::InvalidConfig, "hex digest must be lowercase hexadecimal");
        }
    }
    hex_ = std::string(hex);
}

HexDigest HexDigest::from_bytes(const Md5::Digest& bytes) noexcept {
    HexDigest d;
    d.hex_.resize(kLength);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        d.hex_[2 * i] = kHexChars[bytes[i] >> 4];
        d.hex_[2 * i + 1] = kHexChars[bytes[i] & 0xf];
    }
    return d;
}

std::uint32_t HexDigest::pair_value(std::size_t pair_index) const {
    if (pair_index >= kPairs) {
        throw Error(ErrorCode::LevelOutOfRange, "hex pair index must be below 16");
    }
    return static_cast<std::uint32_t>(hex_nibble(hex_[2 * pair_index]) * 16 +
                                      hex_nibble(hex_[2 * pair_index + 1]));
}

HexDigest md5_hex(std::string_view data) noexcept {
    return HexDigest::from_bytes(Md5::of(data));
}

}  // namespace shardbench
