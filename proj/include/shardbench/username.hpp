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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "shardbench/error.hpp"

namespace shardbench {

/// Usernames are drawn from 0-9, a-z and '_'.
inline constexpr std::size_t kAlphabetSize = 37;
inline constexpr std::size_t kMaxUsernameLength = 64;

/// Alphabet in index order: digits, lowercase letters, underscore.
inline constexpr std::string_view kAlphabet = "0123456789abcdefghijklmnopqrstuvwxyz_";

/// Position of `c` in the alphabet ordering. Throws UsernameError
/// (InvalidCharacter) for anything outside the alphabet, including uppercase.
std::uint32_t char_index(char c);

/// Non-throwing variant; returns -1 for characters outside the alphabet.
constexpr int try_char_index(char c) noexcept {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
    if (c == '_') return 36;
    return -1;
}

/// A validated, lowercase member name of 1..64 alphabet characters.
class Username {
public:
    /// Trims surrounding whitespace, folds ASCII uppercase and validates.
    static Username normalize(std::string_view raw);

    const std::string& str() const noexcept { return value_; }
    std::string_view view() const noexcept { return value_; }
    std::size_t size() const noexcept { return value_.size(); }
    char operator[](std::size_t i) const noexcept { return value_[i]; }

    friend bool operator==(const Username&, const Username&) = default;
    friend auto operator<=>(const Username&, const Username&) = default;

private:
    explicit Username(std::string value) : value_(std::move(value)) {}

    std::string value_;
};

namespace testing {
/// Inverse of char_index. Throws std::out_of_range for index >= 37.
char index_to_char(std::uint32_t index);
}  // namespace testing

}  // namespace shardbench

template <>
struct std::hash<shardbench::Username> {
    std::size_t operator()(const shardbench::Username& u) const noexcept {
        return std::hash<std::string_view>{}(u.view());
    }
};
