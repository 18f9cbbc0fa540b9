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
#include <stdexcept>
#include <string>

namespace shardbench {

enum class ErrorCode {
    EmptyName,
    InvalidCharacter,
    TooLong,
    InvalidConfig,
    NothingToSum,
    LevelOutOfRange,
    EmptyHistogram,
    ShapeMismatch,
    BucketSpaceTooLarge,
    SpaceExhausted,
    FileNotFound,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by username normalization. For InvalidCharacter, `character()`
/// is the offending byte and `position()` its 0-based offset in the raw input.
class UsernameError : public Error {
public:
    UsernameError(ErrorCode code, const std::string& what, char character = '\0',
                  std::size_t position = 0)
        : Error(code, what), character_(character), position_(position) {}

    char character() const noexcept { return character_; }
    std::size_t position() const noexcept { return position_; }

private:
    char character_;
    std::size_t position_;
};

}  // namespace shardbench
