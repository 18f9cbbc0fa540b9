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
#include <span>
#include <vector>

#include "shardbench/strategies.hpp"
#include "shardbench/username.hpp"

namespace shardbench {

/// Largest joint bucket space held densely (covers 64 * 64 * 128).
inline constexpr std::uint64_t kMaxDenseBuckets = std::uint64_t{1} << 21;

/// Dense per-bucket counts over one joint bucket space, zero buckets included.
/// Invariant: sum(counts()) == total(). Members whose placement is too shallow
/// for the analyzed level are tallied in skipped() and not in total().
class Histogram {
public:
    /// Throws Error(BucketSpaceTooLarge) above kMaxDenseBuckets and
    /// Error(InvalidConfig) for zero buckets.
    explicit Histogram(std::uint64_t bucket_count);

    std::uint64_t bucket_count() const noexcept { return counts_.size(); }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }
    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t skipped() const noexcept { return skipped_; }

    void add(std::uint64_t bucket, std::uint64_t n = 1) {
        counts_[bucket] += n;
        total_ += n;
    }
    void add_skipped(std::uint64_t n = 1) noexcept { skipped_ += n; }

    /// Element-wise accumulate; throws Error(ShapeMismatch) on differing sizes.
    Histogram& operator+=(const Histogram& other);

    friend bool operator==(const Histogram&, const Histogram&) = default;

private:
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
    std::uint64_t skipped_ = 0;
};

Histogram merge_histograms(const Histogram& a, const Histogram& b);

/// Product of the moduli for levels 0..=level. Throws Error(LevelOutOfRange)
/// if the strategy is shallower, Error(BucketSpaceTooLarge) past the dense cap.
std::uint64_t joint_bucket_count(const Strategy& s, std::size_t level);

/// Ideal mean and the spread of bucket counts around it.
struct DistributionStats {
    double ideal_mean = 0.0;      // total / bucket_count
    double std_dev = 0.0;         // population deviation about ideal_mean, zeros included
    double deviation_ratio = 0.0; // std_dev / ideal_mean
};

/// Throws Error(EmptyHistogram) when total() == 0.
DistributionStats compute_stats(const Histogram& h);

// Histogram kernels. Names are assigned counter IDs first_id, first_id + 1, ...
// in span order; only the mapping strategy reads them.

/// Single-threaded reference kernel.
Histogram build_histogram_serial(std::span<const Username> names, const Strategy& s,
                                 std::size_t level, std::uint64_t first_id = 1);

/// OpenMP kernel: per-thread private histograms merged at the end. Result is
/// identical to the serial kernel for any thread count; threads == 0 uses
/// default_thread_count().
Histogram build_histogram_parallel(std::span<const Username> names, const Strategy& s,
                                   std::size_t level, std::uint64_t first_id = 1,
                                   std::size_t threads = 0);

/// Server histogram for member IDs first_id..=last_id under counter mapping.
Histogram build_id_histogram_serial(std::uint64_t first_id, std::uint64_t last_id,
                                    const MappingConfig& cfg);
Histogram build_id_histogram_parallel(std::uint64_t first_id, std::uint64_t last_id,
                                      const MappingConfig& cfg, std::size_t threads = 0);

/// Streams a corpus chunk by chunk through the parallel kernel so only the
/// histogram and one chunk are resident. Chunks must arrive in corpus order.
class HistogramBuilder {
public:
    HistogramBuilder(Strategy strategy, std::size_t level, std::size_t threads = 0);

    void add_chunk(std::span<const Username> names);

    const Histogram& histogram() const noexcept { return histogram_; }
    const Strategy& strategy() const noexcept { return strategy_; }
    std::size_t level() const noexcept { return level_; }
    std::uint64_t names_seen() const noexcept { return next_id_ - 1; }

private:
    Strategy strategy_;
    std::size_t level_;
    std::size_t threads_;
    Histogram histogram_;
    std::uint64_t next_id_ = 1;
};

}  // namespace shardbench
