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

#include "shardbench/layout.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <system_error>

#include "shardbench/error.hpp"
#include "shardbench/histogram.hpp"

namespace shardbench {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

}  // namespace

std::string StoragePath::render() const {
    std::string out = root;
    auto append = [&out](const std::string& part) {
        if (out.empty() || out.back() != '/') out += '/';
        out += part;
    };
    for (const auto& s : segments) append(s);
    append(leaf);
    return out;
}

StoragePath letter_path(const Username& u, const std::string& root, int max_depth) {
    StoragePath p{root, {}, u.str()};
    std::size_t depth = max_depth > 0 ? static_cast<std::size_t>(max_depth) : 0;
    depth = std::min(depth, u.size());
    for (std::size_t i = 0; i < depth; ++i) p.segments.emplace_back(1, u[i]);
    return p;
}

StoragePath placement_path(const Placement& placement, const std::string& leaf,
                           const std::string& root) {
    StoragePath p{root, {}, leaf};
    p.segments.reserve(placement.depth());
    for (const auto& level : placement.levels) p.segments.push_back(std::to_string(level.bucket));
    return p;
}

StoragePath md5_path(const Username& u, const Md5Config& cfg, const std::string& root) {
    return placement_path(md5_placement(u, cfg), u.str(), root);
}

std::vector<std::uint64_t> parse_bucket_segments(const StoragePath& path) {
    std::vector<std::uint64_t> out;
    out.reserve(path.segments.size());
    for (const auto& s : path.segments) {
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        bool canonical = !s.empty() && (s.size() == 1 || s[0] != '0');
        if (ec != std::errc() || end != s.data() + s.size() || !canonical) {
            throw Error(ErrorCode::InvalidConfig, "not a bucket segment: " + s);
        }
        out.push_back(value);
    }
    return out;
}

FanoutReport fanout_report(std::span<const std::uint64_t> level_moduli, std::uint64_t limit) {
    FanoutReport r;
    r.limit = limit;
    r.per_level_dirs.assign(level_moduli.begin(), level_moduli.end());
    r.total_leaf_buckets = 1;
    r.dirs_under_one_top = 1;
    for (std::size_t k = 0; k < level_moduli.size(); ++k) {
        r.total_leaf_buckets = saturating_mul(r.total_leaf_buckets, level_moduli[k]);
        if (k > 0) r.dirs_under_one_top = saturating_mul(r.dirs_under_one_top, level_moduli[k]);
        if (level_moduli[k] >= limit) r.ok = false;
    }
    return r;
}

FanoutReport fanout_report(const Md5Config& cfg, std::uint64_t limit) {
    auto m = cfg.level_moduli();
    std::vector<std::uint64_t> moduli(m.begin(), m.end());
    return fanout_report(moduli, limit);
}

FanoutReport fanout_report(const LetterConfig& cfg, std::uint64_t limit) {
    std::vector<std::uint64_t> moduli(static_cast<std::size_t>(cfg.levels()), kAlphabetSize);
    return fanout_report(moduli, limit);
}

std::uint64_t materialize_skeleton(const std::filesystem::path& root,
                                   std::span<const std::uint64_t> level_moduli,
                                   std::uint64_t limit) {
    FanoutReport report = fanout_report(level_moduli, limit);
    if (!report.ok) {
        throw Error(ErrorCode::InvalidConfig, "layout exceeds the per-directory limit of " +
                                                  std::to_string(limit));
    }
    if (level_moduli.empty()) throw Error(ErrorCode::InvalidConfig, "layout has no levels");
    if (report.total_leaf_buckets > kMaxDenseBuckets) {
        throw Error(ErrorCode::BucketSpaceTooLarge, "refusing to create more than " +
                                                        std::to_string(kMaxDenseBuckets) +
                                                        " leaf directories");
    }

    std::vector<std::uint64_t> index(level_moduli.size(), 0);
    // Walk leaves in row-major order; create_directories builds the parents.
    for (std::uint64_t leaf = 0; leaf < report.total_leaf_buckets; ++leaf) {
        std::filesystem::path dir = root;
        for (auto i : index) dir /= std::to_string(i);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());
        for (std::size_t k = index.size(); k-- > 0;) {
            if (++index[k] < level_moduli[k]) break;
            index[k] = 0;
        }
    }

    // m0 + m0*m1 + ... + m0*...*mn
    std::uint64_t created = 0;
    std::uint64_t width = 1;
    for (auto m : level_moduli) {
        width *= m;
        created += width;
    }
    return created;
}

}  // namespace shardbench
