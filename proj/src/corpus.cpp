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

#include "shardbench/corpus.hpp"

#include <array>
#include <istream>
#include <limits>
#include <sstream>
#include <string_view>

#include "name_initials_data.hpp"
#include "shardbench/error.hpp"

namespace shardbench {

std::string format_rejection(const Rejection& r) {
    return "line " + std::to_string(r.line) + ": " + r.reason;
}

CorpusReader::CorpusReader(const std::filesystem::path& path)
    : owned_(std::make_unique<std::ifstream>(path, std::ios::binary)), in_(owned_.get()) {
    if (!*owned_) {
        throw Error(ErrorCode::FileNotFound, "cannot open corpus file " + path.string());
    }
}

CorpusReader::CorpusReader(std::istream& in) : in_(&in) {}

std::optional<Username> CorpusReader::next() {
    while (std::getline(*in_, buffer_)) {
        ++line_;
        bool blank = buffer_.find_first_not_of(" \t\r\n\v\f") == std::string::npos;
        if (blank) continue;
        try {
            return Username::normalize(buffer_);
        } catch (const UsernameError& e) {
            rejections_.push_back({line_, e.what()});
        }
    }
    if (in_->bad()) throw Error(ErrorCode::Io, "read error in corpus");
    return std::nullopt;
}

bool CorpusReader::next_chunk(std::vector<Username>& out, std::size_t max) {
    out.clear();
    while (out.size() < max) {
        auto u = next();
        if (!u) break;
        out.push_back(std::move(*u));
    }
    return !out.empty();
}

LoadedCorpus load_corpus(const std::filesystem::path& path) {
    CorpusReader reader(path);
    LoadedCorpus corpus;
    while (auto u = reader.next()) corpus.names.push_back(std::move(*u));
    corpus.rejections = reader.rejections();
    return corpus;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kVowels = "aeiouy";
constexpr std::string_view kConsonants = "bcdfghjklmnpqrstvwxz";

// Relative English letter frequencies (per mille, rounded).
constexpr std::array<std::uint32_t, 6> kVowelWeights = {82, 127, 70, 75, 28, 20};
constexpr std::array<std::uint32_t, 20> kConsonantWeights = {
    15, 28, 43, 22, 20, 61, 2, 8, 40, 24, 67, 19, 1, 60, 63, 91, 10, 24, 2, 1};

// Body character class choices, out of 1000.
constexpr std::uint32_t kDigitPerMille = 15;
constexpr std::uint32_t kUnderscorePerMille = 5;
constexpr std::uint32_t kSwitchAfterVowel = 750;
constexpr std::uint32_t kSwitchAfterConsonant = 650;

std::vector<std::uint32_t> parse_initials(std::string_view table) {
    std::vector<std::uint32_t> weights(kAlphabetSize, 0);
    std::istringstream in{std::string(table)};
    std::string line;
    while (std::getline(in, line)) {
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line.substr(start));
        std::string symbol;
        std::uint32_t weight = 0;
        if (!(fields >> symbol >> weight) || symbol.size() != 1 ||
            try_char_index(symbol[0]) < 0) {
            throw Error(ErrorCode::InvalidConfig, "malformed name initials entry: " + line);
        }
        weights[static_cast<std::size_t>(try_char_index(symbol[0]))] = weight;
    }
    for (auto w : weights) {
        if (w == 0) {
            throw Error(ErrorCode::InvalidConfig,
                        "name initials table must give every character a positive weight");
        }
    }
    return weights;
}

template <class Weights>
std::uint64_t total_weight(const Weights& w) {
    std::uint64_t sum = 0;
    for (auto x : w) sum += x;
    return sum;
}

template <class Weights>
std::size_t pick_weighted(const Weights& w, std::uint64_t roll) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (roll < w[i]) return i;
        roll -= w[i];
    }
    return w.size() - 1;
}

bool is_vowel(char c) { return kVowels.find(c) != std::string_view::npos; }

}  // namespace

const std::vector<std::uint32_t>& name_initial_weights() {
    static const std::vector<std::uint32_t> weights = parse_initials(detail::kNameInitialsTable);
    return weights;
}

std::uint64_t name_space_capacity(std::size_t min_len, std::size_t max_len) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t power = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
        if (power > kMax / kAlphabetSize) return kMax;
        power *= kAlphabetSize;
        if (len >= min_len) {
            if (total > kMax - power) return kMax;
            total += power;
        }
    }
    return total;
}

void CorpusSpec::validate() const {
    if (count == 0) throw Error(ErrorCode::InvalidConfig, "corpus count must be positive");
    if (min_len == 0) throw Error(ErrorCode::InvalidConfig, "minimum length must be at least 1");
    if (max_len > kMaxUsernameLength) {
        throw Error(ErrorCode::InvalidConfig, "maximum length must be at most 64");
    }
    if (min_len > max_len) {
        throw Error(ErrorCode::InvalidConfig, "minimum length exceeds maximum length");
    }
    if (count > name_space_capacity(min_len, max_len)) {
        throw Error(ErrorCode::SpaceExhausted,
                    "cannot draw " + std::to_string(count) + " distinct names of length " +
                        std::to_string(min_len) + ".." + std::to_string(max_len));
    }
}

CorpusGenerator::CorpusGenerator(const CorpusSpec& spec) : spec_(spec), rng_(spec.seed) {
    spec_.validate();
    if (spec_.model == CorpusModel::NameLike) name_initial_weights();
}

std::uint64_t CorpusGenerator::below(std::uint64_t n) {
    // Reject the low (2^64 mod n) outputs so every residue is equally likely.
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t r = rng_();
        if (r >= threshold) return r % n;
    }
}

std::string CorpusGenerator::draw_name() {
    std::size_t len = spec_.min_len + below(spec_.max_len - spec_.min_len + 1);
    std::string name;
    name.reserve(len);

    if (spec_.model == CorpusModel::Uniform) {
        for (std::size_t i = 0; i < len; ++i) name.push_back(kAlphabet[below(kAlphabetSize)]);
        return name;
    }

    const auto& initials = name_initial_weights();
    name.push_back(kAlphabet[pick_weighted(initials, below(total_weight(initials)))]);
    static const std::uint64_t vowel_total = total_weight(kVowelWeights);
    static const std::uint64_t consonant_total = total_weight(kConsonantWeights);
    while (name.size() < len) {
        std::uint64_t roll = below(1000);
        if (roll < kDigitPerMille) {
            name.push_back(static_cast<char>('0' + below(10)));
            continue;
        }
        if (roll < kDigitPerMille + kUnderscorePerMille) {
            name.push_back('_');
            continue;
        }
        char prev = name.back();
        bool prev_vowel = is_vowel(prev);
        bool prev_consonant = !prev_vowel && prev >= 'a' && prev <= 'z';
        bool want_vowel;
        if (prev_vowel) {
            want_vowel = below(1000) >= kSwitchAfterVowel;
        } else if (prev_consonant) {
            want_vowel = below(1000) < kSwitchAfterConsonant;
        } else {
            want_vowel = below(2) == 0;
        }
        if (want_vowel) {
            name.push_back(kVowels[pick_weighted(kVowelWeights, below(vowel_total))]);
        } else {
            name.push_back(
                kConsonants[pick_weighted(kConsonantWeights, below(consonant_total))]);
        }
    }
    return name;
}

std::optional<Username> CorpusGenerator::next() {
    if (emitted_ >= spec_.count) return std::nullopt;
    // Generous stall bound: a healthy model finds a fresh name within a few
    // draws until the space is nearly full.
    constexpr std::uint64_t kMaxAttempts = 10'000'000;
    for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::string name = draw_name();
        if (seen_.insert(name).second) {
            ++emitted_;
            return Username::normalize(name);
        }
    }
    throw Error(ErrorCode::SpaceExhausted,
                "no fresh name after " + std::to_string(kMaxAttempts) + " draws");
}

std::vector<Username> generate_corpus(const CorpusSpec& spec) {
    CorpusGenerator gen(spec);
    std::vector<Username> out;
    out.reserve(spec.count);
    while (auto u = gen.next()) out.push_back(std::move(*u));
    return out;
}

}  // namespace shardbench
