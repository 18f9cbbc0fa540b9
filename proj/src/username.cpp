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

#include "shardbench/username.hpp"

#include <stdexcept>

namespace shardbench {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyName: return "EmptyName";
        case ErrorCode::InvalidCharacter: return "InvalidCharacter";
        case ErrorCode::TooLong: return "TooLong";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::NothingToSum: return "NothingToSum";
        case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
        case ErrorCode::EmptyHistogram: return "EmptyHistogram";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::BucketSpaceTooLarge: return "BucketSpaceTooLarge";
        case ErrorCode::SpaceExhausted: return "SpaceExhausted";
        case ErrorCode::FileNotFound: return "FileNotFound";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string describe_char(char c) {
    auto byte = static_cast<unsigned char>(c);
    if (byte >= 0x20 && byte < 0x7f) return std::string("'") + c + "'";
    static constexpr char kHex[] = "0123456789abcdef";
    return std::string("byte 0x") + kHex[byte >> 4] + kHex[byte & 0xf];
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

}  // namespace

std::uint32_t char_index(char c) {
    int idx = try_char_index(c);
    if (idx < 0) {
        throw UsernameError(ErrorCode::InvalidCharacter,
                            "invalid character " + describe_char(c), c, 0);
    }
    return static_cast<std::uint32_t>(idx);
}

Username Username::normalize(std::string_view raw) {
    std::size_t begin = 0;
    std::size_t end = raw.size();
    while (begin < end && is_space(raw[begin])) ++begin;
    while (end > begin && is_space(raw[end - 1])) --end;
    if (begin == end) {
        throw UsernameError(ErrorCode::EmptyName, "empty user name");
    }
    if (end - begin > kMaxUsernameLength) {
        throw UsernameError(ErrorCode::TooLong,
                            "user name longer than " + std::to_string(kMaxUsernameLength) +
                                " characters");
    }

    std::string value;
    value.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        char c = raw[i];
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        if (try_char_index(c) < 0) {
            throw UsernameError(ErrorCode::InvalidCharacter,
                                "invalid character " + describe_char(raw[i]) +
                                    " at position " + std::to_string(i),
                                raw[i], i);
        }
        value.push_back(c);
    }
    return Username(std::move(value));
}

namespace testing {

char index_to_char(std::uint32_t index) {
    if (index >= kAlphabetSize) throw std::out_of_range("alphabet index out of range");
    return kAlphabet[index];
}

}  // namespace testing

}  // namespace shardbench
