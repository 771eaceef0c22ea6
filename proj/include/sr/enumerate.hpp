#pragma once

#include <sr/instance.hpp>
#include <sr/partition.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace sr {

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("enumeration budget exceeded") {}
};

/// Caps recursion nodes. A zero limit means unlimited.
struct Budget {
    std::uint64_t limit = 0;
    std::uint64_t used = 0;

    void tick()
    {
        if (++used > limit && limit != 0)
            throw BudgetExceeded();
    }
};

struct PartialPartition {
    std::vector<Cycle> committed;
    std::vector<AgentId> remaining;
};

/// Exhaustive search over successor assignments, filtered for stability.
/// Throws std::invalid_argument above `max_agents`.
auto brute_force_partitions(const Instance & inst, int max_agents = 10) -> std::vector<Partition>;

/// All reduced stable partitions, sorted, via the stable matchings of the
/// truncated instance.
auto enumerate_reduced_partitions(const Instance & inst) -> std::vector<Partition>;

/// The transposition through `a` forced by `pp.committed`, if any: the pair
/// of `a` that is fixed in the residual instance.
auto fc_helper(const Instance & inst, const PartialPartition & pp, AgentId a) -> std::optional<Cycle>;

/// True iff `committed` (which must contain every odd cycle) extends to a
/// stable partition: no T2 violation inside it and a residual that admits a
/// perfect stable matching.
auto extension_feasible(const Instance & inst, std::span<const Cycle> committed) -> bool;

/// Streams every stable partition in recursion order.
void for_each_partition(const Instance & inst, const std::function<void(const Partition &)> & emit,
        Budget * budget = nullptr);

/// All stable partitions, sorted.
auto enumerate_all_partitions(const Instance & inst, Budget * budget = nullptr) -> std::vector<Partition>;

/// Reduced partitions plus every successful pairwise merge, sorted.
auto enumerate_all_partitions_naive(const Instance & inst) -> std::vector<Partition>;

} // namespace sr
