#pragma once

#include <sr/instance.hpp>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace sr {

/// Odd lengths tracked by the histogram: 1, 3, ..., 11. Longer cycles are
/// counted in the totals only.
inline constexpr std::array<int, 6> odd_lengths{1, 3, 5, 7, 9, 11};

struct InstanceStats {
    int n = 0;
    std::uint64_t seed = 0;
    bool solvable = false;
    long long rp = 0;
    /// Valid only when budget_exceeded is false.
    long long p = 0;
    long long rsc = 0;
    long long sc = 0;
    int odd_count = 0;
    int odd_agents = 0;
    std::vector<int> odd_cycle_lengths;
    std::array<int, odd_lengths.size()> hist{};
    bool budget_exceeded = false;
};

struct AggregateRow {
    int n = 0;
    int samples = 0;
    /// Percentage of solvable instances.
    double solvable_rate = 0;
    double mean_rp = 0;
    /// Over instances that stayed within budget.
    double mean_p = 0;
    double mean_rsc = 0;
    double mean_sc = 0;
    /// The next five fields are over unsolvable instances only. Odd length
    /// is pooled over all their odd cycles.
    double mean_odd_len = 0;
    double mean_odd_count = 0;
    double mean_odd_agents = 0;
    std::array<double, odd_lengths.size()> hist{};
    int budget_exceeded = 0;
};

struct StatsConfig {
    std::vector<int> sizes;
    int samples = 1;
    std::uint64_t seed = 0;
    /// Recursion nodes per instance for the full enumeration; 0 = unlimited.
    std::uint64_t budget = 1'000'000;
};

/// Seed of instance `index` at size `n`.
auto instance_seed(std::uint64_t base, int n, int index) -> std::uint64_t;

auto instance_stats(const Instance & inst, std::uint64_t budget) -> InstanceStats;
auto instance_stats(int n, std::uint64_t seed, std::uint64_t budget) -> InstanceStats;

auto aggregate(int n, const std::vector<InstanceStats> & stats) -> AggregateRow;

/// Serial reference.
auto run_stats_serial(const StatsConfig & config) -> std::vector<AggregateRow>;
/// Instances spread over OpenMP threads; same rows as the serial version.
auto run_stats(const StatsConfig & config) -> std::vector<AggregateRow>;

void write_csv_header(std::ostream & out);
void write_csv_row(std::ostream & out, const AggregateRow & row);
void write_csv(std::ostream & out, const std::vector<AggregateRow> & rows);

} // namespace sr
