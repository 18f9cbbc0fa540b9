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
#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "shardbench/username.hpp"

namespace shardbench {

// ---------------------------------------------------------------------------
// Loading

/// A corpus line that failed normalization. `line` is 1-based.
struct Rejection {
    std::size_t line = 0;
    std::string reason;
};

/// "line <n>: <reason>"
std::string format_rejection(const Rejection& r);

/// Reads one raw name per line, yielding normalized usernames in file order.
/// Blank lines are skipped; invalid lines are recorded and skipped.
class CorpusReader {
public:
    /// Throws Error(FileNotFound) if the file cannot be opened.
    explicit CorpusReader(const std::filesystem::path& path);
    explicit CorpusReader(std::istream& in);

    std::optional<Username> next();

    /// Reads up to `max` names into `out` (cleared first). Returns false once
    /// the stream is exhausted and nothing was read.
    bool next_chunk(std::vector<Username>& out, std::size_t max);

    const std::vector<Rejection>& rejections() const noexcept { return rejections_; }
    std::size_t lines_read() const noexcept { return line_; }

private:
    std::unique_ptr<std::ifstream> owned_;
    std::istream* in_;
    std::size_t line_ = 0;
    std::vector<Rejection> rejections_;
    std::string buffer_;
};

struct LoadedCorpus {
    std::vector<Username> names;
    std::vector<Rejection> rejections;
};

LoadedCorpus load_corpus(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Generation

enum class CorpusModel {
    Uniform,   // every character i.i.d. over the 37-symbol alphabet
    NameLike,  // skewed initials, vowel/consonant alternation in the body
};

struct CorpusSpec {
    CorpusModel model = CorpusModel::NameLike;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
    std::size_t min_len = 3;
    std::size_t max_len = 12;

    /// Throws Error(InvalidConfig) on count 0, min_len 0, max_len > 64 or
    /// min_len > max_len, and Error(SpaceExhausted) when count exceeds the
    /// number of distinct names the length range admits.
    void validate() const;
};

/// Number of distinct alphabet strings with length in [min_len, max_len],
/// saturating at UINT64_MAX.
std::uint64_t name_space_capacity(std::size_t min_len, std::size_t max_len) noexcept;

/// Deterministic stream of `count` distinct usernames.
///
/// Randomness comes from std::mt19937_64, whose output sequence is fixed by
/// the C++ standard, reduced to ranges with integer rejection sampling and
/// integer weight tables. No floating point or std:: distributions are
/// involved, so a seed gives the same names on every platform.
class CorpusGenerator {
public:
    explicit CorpusGenerator(const CorpusSpec& spec);

    /// nullopt after `count` names. Throws Error(SpaceExhausted) if the model
    /// stalls without finding a fresh name.
    std::optional<Username> next();

    const CorpusSpec& spec() const noexcept { return spec_; }

private:
    std::string draw_name();
    std::uint64_t below(std::uint64_t n);

    CorpusSpec spec_;
    std::mt19937_64 rng_;
    std::unordered_set<std::string> seen_;
    std::uint64_t emitted_ = 0;
};

std::vector<Username> generate_corpus(const CorpusSpec& spec);

/// Parsed first-character weights of the name-like model, indexed by
/// char_index. Exposed for inspection and tests.
const std::vector<std::uint32_t>& name_initial_weights();

}  // namespace shardbench
