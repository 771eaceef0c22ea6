#pragma once

#include <sr/instance.hpp>
#include <sr/partition.hpp>

#include <string>
#include <vector>

namespace sr {

/// A derived instance plus what is needed to map its matchings back.
struct TransformResult {
    Instance derived;
    /// Odd cycles shared by every stable partition of the source.
    std::vector<Cycle> odd_cycles;
    /// One reduced stable partition of the source.
    Partition base_partition;
    /// Dummy pairs (padded instance only).
    std::vector<Pair> dummy_pairs;
    /// Source agent for each derived agent id, 0 for dummies.
    std::vector<AgentId> agent_map;
    /// Pairs removed by the truncation step, sorted.
    std::vector<Pair> deleted_pairs;
};

/// The source restricted to agents outside its odd cycles.
auto construct_IE(const Instance & inst) -> TransformResult;

/// The restriction with every pair that would let a non-odd agent block an
/// odd cycle removed. Its stable matchings are exactly the transposition parts
/// of the reduced stable partitions.
auto construct_IT(const Instance & inst) -> TransformResult;

/// Folds a2 into a1 so that a stable cycle (a1 a2 ...) of even length shows
/// up as an odd cycle through a1. Throws std::invalid_argument unless a1 and
/// a2 are distinct and mutually acceptable.
auto construct_IS(const Instance & inst, AgentId a1, AgentId a2) -> Instance;

/// Truncated instance with each truncated entry replaced by a dummy agent;
/// odd-cycle agents are dropped. Dummies come in mutually first-choice pairs
/// with ids above the source bound.
auto construct_IP(const Instance & inst) -> TransformResult;

/// Partition of the source from a stable matching of `result.derived`:
/// non-dummy pairs as transpositions plus the odd cycles. Throws
/// std::invalid_argument if some non-dummy agent is unmatched or a dummy is
/// paired with a source agent.
auto lift(const TransformResult & result, const Matching & m) -> Partition;

/// Derived instance file, then an "odd:" line and one "map:" line per agent.
auto format_transform(const TransformResult & result) -> std::string;

} // namespace sr
