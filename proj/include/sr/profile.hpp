#pragma once

#include <sr/instance.hpp>
#include <sr/partition.hpp>

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace sr {

/// Rank counts of a partition. Index k holds the count for rank k + 1.
/// Costs are kept doubled so they stay integral.
struct Profile {
    std::vector<int> successor;
    std::vector<int> predecessor;
    std::vector<int> combined;
    int regret = 0;
    long long cost2 = 0;

    auto first_choices() const -> int { return combined.empty() ? 0 : combined[0]; }
    /// Count at rank r (1-based); zero beyond the vector.
    auto at(int r) const -> int
    {
        return r >= 1 && r <= static_cast<int>(combined.size()) ? combined[r - 1] : 0;
    }
    auto cost_string() const -> std::string;
};

/// Profile of `p` over `inst`. A 1-cycle adds one successor and one
/// predecessor entry at rank (own list length + 1) and nothing to the cost.
auto profile(const Instance & inst, const Partition & p) -> Profile;

/// Profile of a matching: one entry per matched agent.
auto matching_profile(const Instance & inst, const Matching & m) -> Profile;

enum class Order { Forward, Reverse };

/// Lexicographic comparison; Reverse compares the reversed vectors.
/// Throws std::invalid_argument on a length mismatch.
auto compare_profiles(std::span<const int> x, std::span<const int> y, Order mode = Order::Forward)
        -> std::strong_ordering;

auto format_vector(std::span<const int> v) -> std::string;

} // namespace sr
