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

#include "shardbench/histogram.hpp"

#include <omp.h>

#include <cmath>
#include <string>

#include "shardbench/error.hpp"
#include "shardbench/parallel.hpp"

namespace shardbench {

namespace {

// Below this many items the auto thread count falls back to one worker;
// per-thread histogram setup would dominate.
constexpr std::size_t kMinItemsPerThread = 2048;

std::size_t resolve_threads(std::size_t requested, std::uint64_t items) {
    if (requested != 0) return requested;
    std::size_t n = default_thread_count();
    std::uint64_t useful = items / kMinItemsPerThread;
    if (useful < n) n = useful == 0 ? 1 : static_cast<std::size_t>(useful);
    return n;
}

void check_first_id(std::uint64_t first_id) {
    if (first_id == 0) throw Error(ErrorCode::InvalidConfig, "member IDs start at 1");
}

void tally(Histogram& h, const Username& u, std::uint64_t id, const Strategy& s,
           std::size_t level) {
    if (auto bucket = joint_bucket(u, id, s, level)) {
        h.add(*bucket);
    } else {
        h.add_skipped();
    }
}

}  // namespace

Histogram::Histogram(std::uint64_t bucket_count) {
    if (bucket_count == 0) throw Error(ErrorCode::InvalidConfig, "histogram needs a bucket");
    if (bucket_count > kMaxDenseBuckets) {
        throw Error(ErrorCode::BucketSpaceTooLarge,
                    "joint bucket space of " + std::to_string(bucket_count) +
                        " exceeds the dense limit of " + std::to_string(kMaxDenseBuckets));
    }
    counts_.assign(bucket_count, 0);
}

Histogram& Histogram::operator+=(const Histogram& other) {
    if (other.counts_.size() != counts_.size()) {
        throw Error(ErrorCode::ShapeMismatch,
                    "cannot merge histograms of " + std::to_string(counts_.size()) + " and " +
                        std::to_string(other.counts_.size()) + " buckets");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    total_ += other.total_;
    skipped_ += other.skipped_;
    return *this;
}

Histogram merge_histograms(const Histogram& a, const Histogram& b) {
    Histogram out = a;
    out += b;
    return out;
}

std::uint64_t joint_bucket_count(const Strategy& s, std::size_t level) {
    auto moduli = level_moduli(s);
    if (level >= moduli.size()) {
        throw Error(ErrorCode::LevelOutOfRange,
                    "level " + std::to_string(level) + " is out of range for " +
                        strategy_name(s) + " with depth " + std::to_string(moduli.size()));
    }
    std::uint64_t product = 1;
    for (std::size_t k = 0; k <= level; ++k) {
        product *= moduli[k];
        if (product > kMaxDenseBuckets) {
            throw Error(ErrorCode::BucketSpaceTooLarge,
                        "joint bucket space at level " + std::to_string(level) +
                            " exceeds the dense limit of " + std::to_string(kMaxDenseBuckets));
        }
    }
    return product;
}

DistributionStats compute_stats(const Histogram& h) {
    if (h.total() == 0) throw Error(ErrorCode::EmptyHistogram, "histogram has no members");
    DistributionStats stats;
    auto buckets = static_cast<double>(h.bucket_count());
    stats.ideal_mean = static_cast<double>(h.total()) / buckets;
    double sum_sq = 0.0;
    for (std::uint64_t c : h.counts()) {
        double d = static_cast<double>(c) - stats.ideal_mean;
        sum_sq += d * d;
    }
    stats.std_dev = std::sqrt(sum_sq / buckets);
    stats.deviation_ratio = stats.std_dev / stats.ideal_mean;
    return stats;
}

Histogram build_histogram_serial(std::span<const Username> names, const Strategy& s,
                                 std::size_t level, std::uint64_t first_id) {
    check_first_id(first_id);
    Histogram h(joint_bucket_count(s, level));
    for (std::size_t i = 0; i < names.size(); ++i) tally(h, names[i], first_id + i, s, level);
    return h;
}

Histogram build_histogram_parallel(std::span<const Username> names, const Strategy& s,
                                   std::size_t level, std::uint64_t first_id,
                                   std::size_t threads) {
    check_first_id(first_id);
    std::uint64_t buckets = joint_bucket_count(s, level);
    std::size_t workers = resolve_threads(threads, names.size());
    if (workers <= 1) return build_histogram_serial(names, s, level, first_id);

    std::vector<Histogram> partial(workers, Histogram(buckets));
    auto n = static_cast<std::ptrdiff_t>(names.size());
#pragma omp parallel num_threads(static_cast<int>(workers))
    {
        Histogram& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            auto idx = static_cast<std::size_t>(i);
            tally(local, names[idx], first_id + idx, s, level);
        }
    }

    Histogram out(buckets);
    for (const auto& p : partial) out += p;
    return out;
}

Histogram build_id_histogram_serial(std::uint64_t first_id, std::uint64_t last_id,
                                    const MappingConfig& cfg) {
    check_first_id(first_id);
    Histogram h(cfg.num_servers());
    for (std::uint64_t id = first_id; id <= last_id && id != 0; ++id) {
        h.add(counter_placement(id, cfg).server);
    }
    return h;
}

Histogram build_id_histogram_parallel(std::uint64_t first_id, std::uint64_t last_id,
                                      const MappingConfig& cfg, std::size_t threads) {
    check_first_id(first_id);
    if (last_id < first_id) return Histogram(cfg.num_servers());
    std::uint64_t items = last_id - first_id + 1;
    std::size_t workers = resolve_threads(threads, items);
    if (workers <= 1) return build_id_histogram_serial(first_id, last_id, cfg);

    std::vector<Histogram> partial(workers, Histogram(cfg.num_servers()));
    auto n = static_cast<std::int64_t>(items);
#pragma omp parallel num_threads(static_cast<int>(workers))
    {
        Histogram& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            local.add(counter_placement(first_id + static_cast<std::uint64_t>(i), cfg).server);
        }
    }

    Histogram out(cfg.num_servers());
    for (const auto& p : partial) out += p;
    return out;
}

HistogramBuilder::HistogramBuilder(Strategy strategy, std::size_t level, std::size_t threads)
    : strategy_(std::move(strategy)),
      level_(level),
      threads_(threads),
      histogram_(joint_bucket_count(strategy_, level)) {}

void HistogramBuilder::add_chunk(std::span<const Username> names) {
    histogram_ += build_histogram_parallel(names, strategy_, level_, next_id_, threads_);
    next_id_ += names.size();
}

}  // namespace shardbench
