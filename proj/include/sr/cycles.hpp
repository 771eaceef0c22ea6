#pragma once

#include <sr/instance.hpp>
#include <sr/partition.hpp>

#include <optional>
#include <span>
#include <vector>

namespace sr {

/// Outcome of completing (a1 a2 ...) to an even stable cycle.
struct EvenCompletion {
    Cycle cycle;
    /// The cycle together with the rest of the auxiliary partition.
    Partition partition;
    /// {a1, a3} does not block: the only check needed when (a1 a2) is known
    /// to be a stable transposition.
    bool pair_check = false;
    /// `partition` passes the full stability check.
    bool fully_verified = false;
};

/// The spliced candidate, or nullopt when a1 is not on an odd cycle of length
/// at least 3 in the auxiliary partition.
auto complete_even_cycle_detail(const Instance & inst, AgentId a1, AgentId a2) -> std::optional<EvenCompletion>;

/// Fold-only completion: the candidate when both checks pass. Misses the
/// cycle when a2 ranks a1's cycle predecessor above a1.
auto fold_even_cycle(const Instance & inst, AgentId a1, AgentId a2) -> std::optional<Cycle>;

/// The even stable cycle of length at least 4 in which a2 follows a1, if any.
/// Tries the fold first, then searches merges of reduced partitions.
auto complete_even_cycle(const Instance & inst, AgentId a1, AgentId a2) -> std::optional<Cycle>;

/// A stable partition containing `c`, or nullopt if `c` is not a stable cycle.
auto verify_cycle(const Instance & inst, const Cycle & c) -> std::optional<Partition>;

/// Cycles present in every stable partition.
auto fixed_cycles(const Instance & inst) -> std::vector<Cycle>;

/// Odd cycles plus stable transpositions.
auto reduced_stable_cycles(const Instance & inst) -> std::vector<Cycle>;

/// Every stable cycle: the reduced ones plus even cycles grown from stable
/// transpositions. Serial reference version.
auto all_stable_cycles(const Instance & inst) -> std::vector<Cycle>;

/// Same set as all_stable_cycles; the candidate scan runs under OpenMP.
auto all_stable_cycles_parallel(const Instance & inst) -> std::vector<Cycle>;

/// Building blocks for callers that already hold the odd cycles and the
/// stable transpositions.
auto even_stable_cycles(const Instance & inst, std::span<const Pair> stable_transpositions) -> std::vector<Cycle>;
auto even_stable_cycles_parallel(const Instance & inst, std::span<const Pair> stable_transpositions)
        -> std::vector<Cycle>;

} // namespace sr
