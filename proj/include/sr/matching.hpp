#pragma once

#include <sr/instance.hpp>
#include <sr/partition.hpp>

#include <optional>
#include <span>
#include <vector>

namespace sr {

/// Preference lists left after the proposal phase, indexed by agent id.
/// Every stable partition and stable matching uses only these pairs.
auto phase_one_table(const Instance & inst) -> std::vector<std::vector<AgentId>>;

/// One stable partition of `inst`. Lists may be incomplete. The result holds
/// only transpositions and odd cycles; 1-cycles are agents left alone.
auto find_stable_partition(const Instance & inst) -> Partition;

/// A stable matching, or nullopt when none exists.
auto find_stable_matching(const Instance & inst) -> std::optional<Matching>;

/// Every stable matching, sorted, without repetition.
auto all_stable_matchings(const Instance & inst) -> std::vector<Matching>;

/// Union over all stable matchings, sorted.
auto stable_pairs(const Instance & inst) -> std::vector<Pair>;
/// Intersection over all stable matchings, sorted. Empty when unsolvable.
auto fixed_pairs(const Instance & inst) -> std::vector<Pair>;

/// The partner `a` has in every stable matching, if there is one. Cheaper
/// than intersecting the full enumeration.
auto fixed_partner(const Instance & inst, AgentId a) -> std::optional<AgentId>;

/// Exhaustive scan over all matchings filtered by verify_matching.
/// Throws std::invalid_argument when inst has more than `max_agents` agents.
auto brute_force_matchings(const Instance & inst, int max_agents = 12) -> std::vector<Matching>;

/// Instance left over once `committed` cycles are fixed: each committed agent
/// a_j cuts itself and everything after it from the list of every agent a_j
/// prefers to its predecessor, then leaves. Cuts are applied symmetrically.
auto residual_instance(const Instance & inst, std::span<const Cycle> committed) -> Instance;

} // namespace sr
